// Copyright 2026 The GameHodge Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gamehodge/decompose.h"

#include <algorithm>
#include <cmath>

#include "gamehodge/errors.h"
#include "gamehodge/flow.h"
#include "gamehodge/solver.h"

namespace gamehodge {

Decomposition Decompose(const Game& game, double tol) {
  const StrategyShape& shape = game.shape();
  const int players = game.num_players();
  const std::int64_t n = shape.num_profiles();

  // b = sum_m Delta0_m u^m = sum_m h_m Pi_m u^m.
  std::vector<NodeFunction> projected(players);
  NodeFunction rhs(n, 0.0);
  for (int m = 0; m < players; ++m) {
    projected[m] = ProjectPlayer(shape, m, game.utilities(m));
    const double h = shape.counts()[m];
    for (std::int64_t i = 0; i < n; ++i) rhs[i] += h * projected[m][i];
  }

  PinvSolveOptions options;
  options.tol = std::min(tol, 1e-10);
  PinvSolveResult solve = LaplacianPinvSolve(shape, rhs, options);

  std::vector<NodeFunction> pot(players), harm(players), non(players);
  for (int m = 0; m < players; ++m) {
    pot[m] = ProjectPlayer(shape, m, solve.phi);
    harm[m].resize(n);
    non[m].resize(n);
    const auto u = game.utilities(m);
    for (std::int64_t i = 0; i < n; ++i) {
      harm[m][i] = projected[m][i] - pot[m][i];
      non[m][i] = u[i] - projected[m][i];
    }
  }

  Decomposition out{game.WithUtilities(std::move(pot)),
                    game.WithUtilities(std::move(harm)),
                    game.WithUtilities(std::move(non)),
                    std::move(solve.phi),
                    {}};

  const GraphPtr graph = GameGraph::Build(shape);
  out.residuals.reconstruction = MaxAbsDifference(
      out.potential + out.harmonic + out.nonstrategic, game);
  const NodeFunction div =
      DivergenceAdjoint(PairwiseComparison(graph, out.harmonic));
  for (double v : div) {
    out.residuals.harmonic_divergence =
        std::max(out.residuals.harmonic_divergence, std::abs(v));
  }
  out.residuals.curl = Curl(PairwiseComparison(graph, game)).MaxAbs();
  out.residuals.solver = solve.residual;
  return out;
}

double GameInnerProduct(const Game& a, const Game& b) {
  if (!(a.shape() == b.shape())) throw ShapeError("games have different shapes");
  double sum = 0.0;
  for (int m = 0; m < a.num_players(); ++m) {
    sum += a.shape().counts()[m] * InnerProduct(a.utilities(m), b.utilities(m));
  }
  return sum;
}

double GameNorm(const Game& game) {
  return std::sqrt(std::max(0.0, GameInnerProduct(game, game)));
}

double GameDistance(const Game& a, const Game& b) { return GameNorm(a - b); }

bool IsPotential(const Game& game, const Decomposition& parts, double tol) {
  return GameNorm(parts.harmonic) <= tol * std::max(1.0, GameNorm(game));
}

bool IsHarmonic(const Game& game, const Decomposition& parts, double tol) {
  return GameNorm(parts.potential) <= tol * std::max(1.0, GameNorm(game));
}

bool IsPotential(const Game& game, double tol) {
  return IsPotential(game, Decompose(game, tol), tol);
}

bool IsHarmonic(const Game& game, double tol) {
  return IsHarmonic(game, Decompose(game, tol), tol);
}

std::optional<NodeFunction> PotentialFunction(const Game& game, double tol) {
  Decomposition parts = Decompose(game, tol);
  if (!IsPotential(game, parts, tol)) return std::nullopt;
  // Re-check phi(q) - phi(p) = u^m(q) - u^m(p) on every m-comparable pair.
  const StrategyShape& shape = game.shape();
  const double slack = tol * std::max(1.0, MaxAbsPayoff(game));
  const NodeFunction& phi = parts.potential_fn;
  for (int m = 0; m < game.num_players(); ++m) {
    const auto u = game.utilities(m);
    for (ProfileIndex p = 0; p < shape.num_profiles(); ++p) {
      for (int k = shape.Coordinate(p, m) + 1; k < shape.counts()[m]; ++k) {
        const ProfileIndex q = shape.Deviate(p, m, k);
        if (std::abs((phi[q] - phi[p]) - (u[q] - u[p])) > slack) {
          return std::nullopt;
        }
      }
    }
  }
  return std::move(parts.potential_fn);
}

Game ClosestPotential(const Game& game) {
  return game - Decompose(game).harmonic;
}

Game ClosestHarmonic(const Game& game) {
  return game - Decompose(game).potential;
}

BimatrixComponents DecomposeBimatrixNormalized(const Eigen::MatrixXd& row,
                                               const Eigen::MatrixXd& col,
                                               double tol) {
  if (row.rows() != row.cols() || col.rows() != col.cols() ||
      row.rows() != col.rows()) {
    throw ShapeError("bimatrix closed form needs equal square matrices");
  }
  const Eigen::Index h = row.rows();
  const double scale = std::max(1.0, std::max(row.cwiseAbs().maxCoeff(),
                                               col.cwiseAbs().maxCoeff()));
  if (row.colwise().sum().cwiseAbs().maxCoeff() > tol * scale ||
      col.rowwise().sum().cwiseAbs().maxCoeff() > tol * scale) {
    throw PreconditionError(
        "bimatrix closed form needs normalized payoffs; normalize first");
  }
  const Eigen::MatrixXd ones = Eigen::MatrixXd::Ones(h, h);
  const Eigen::MatrixXd s = 0.5 * (row + col);
  const Eigen::MatrixXd d = 0.5 * (row - col);
  const Eigen::MatrixXd gamma =
      (row * ones - ones * col) / (2.0 * static_cast<double>(h));
  return {s + gamma, s - gamma, d - gamma, -d + gamma};
}

}  // namespace gamehodge
