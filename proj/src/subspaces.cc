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

#include "gamehodge/subspaces.h"

#include <algorithm>
#include <cmath>

#include "gamehodge/decompose.h"
#include "gamehodge/errors.h"
#include "gamehodge/flow.h"
#include "gamehodge/random.h"

namespace gamehodge {
namespace {

std::int64_t Product(const std::vector<int>& counts) {
  std::int64_t total = 1;
  for (int h : counts) total *= h;
  return total;
}

void CheckRankAmbient(std::int64_t ambient) {
  if (ambient > kMaxRankAmbient) {
    throw SizeError("dense rank limited to ambient dimension " +
                    std::to_string(kMaxRankAmbient));
  }
}

}  // namespace

std::string TagName(SubspaceTag tag) {
  switch (tag) {
    case SubspaceTag::kNonstrategic:
      return "N";
    case SubspaceTag::kHarmonic2p:
      return "H2p";
    case SubspaceTag::kPotentialSpan:
      return "P-span";
    case SubspaceTag::kDerived:
      return "derived";
  }
  return "derived";
}

SubspaceBasis NonstrategicBasis(const std::vector<int>& counts) {
  SubspaceBasis basis;
  basis.tag = SubspaceTag::kNonstrategic;
  basis.shape = StrategyShape(counts);
  const StrategyShape& shape = basis.shape;
  for (int m = 0; m < shape.num_players(); ++m) {
    for (std::int64_t o = 0; o < shape.num_opponent_profiles(m); ++o) {
      std::vector<NodeFunction> u(shape.num_players(),
                                  NodeFunction(shape.num_profiles(), 0.0));
      for (int s = 0; s < shape.count(m); ++s) {
        u[m][shape.FromOpponentIndex(o, m, s)] = 1.0;
      }
      basis.games.emplace_back(shape, std::move(u));
    }
  }
  return basis;
}

std::vector<double> HarmonicBasisPattern(int h1, int h2, int i, int j) {
  if (i < 0 || j < 0 || i + 1 >= h1 || j + 1 >= h2) {
    throw BoundsError("harmonic basis index out of range");
  }
  std::vector<double> a(static_cast<std::size_t>(h1) * h2, 0.0);
  a[i * h2 + j] = 1.0;
  a[(i + 1) * h2 + j + 1] = 1.0;
  a[(i + 1) * h2 + j] = -1.0;
  a[i * h2 + j + 1] = -1.0;
  return a;
}

SubspaceBasis HarmonicBasis2p(int h1, int h2) {
  SubspaceBasis basis;
  basis.tag = SubspaceTag::kHarmonic2p;
  basis.shape = StrategyShape({h1, h2});
  if (h1 < 2 || h2 < 2) {
    basis.warning = "a player with one strategy leaves no harmonic games";
    return basis;
  }
  for (int i = 0; i + 1 < h1; ++i) {
    for (int j = 0; j + 1 < h2; ++j) {
      const std::vector<double> a = HarmonicBasisPattern(h1, h2, i, j);
      std::vector<double> row(a.size()), col(a.size());
      for (std::size_t k = 0; k < a.size(); ++k) {
        row[k] = h2 * a[k];
        col[k] = -h1 * a[k];
      }
      basis.games.push_back(
          Game::Bimatrix(h1, h2, std::move(row), std::move(col)));
    }
  }
  return basis;
}

SubspaceDims ClosedFormDims(const std::vector<int>& counts) {
  StrategyShape shape(counts);
  const std::int64_t total = shape.num_profiles();
  const std::int64_t players = shape.num_players();
  std::int64_t others = 0;
  for (int h : counts) others += total / h;
  SubspaceDims d;
  d.potential = total - 1;
  d.harmonic = (players - 1) * total - others + 1;
  d.nonstrategic = others;
  d.potential_games = total + others - 1;
  d.harmonic_games = (players - 1) * total + 1;
  return d;
}

Eigen::MatrixXd StackGames(const std::vector<Game>& games) {
  if (games.empty()) return Eigen::MatrixXd(0, 0);
  const std::int64_t n = games.front().num_profiles();
  const int players = games.front().num_players();
  Eigen::MatrixXd out(n * players, static_cast<Eigen::Index>(games.size()));
  for (std::size_t k = 0; k < games.size(); ++k) {
    if (!(games[k].shape() == games.front().shape())) {
      throw ShapeError("stacked games must share one shape");
    }
    for (int m = 0; m < players; ++m) {
      const auto u = games[k].utilities(m);
      for (std::int64_t p = 0; p < n; ++p) out(m * n + p, k) = u[p];
    }
  }
  return out;
}

std::int64_t NumericRank(const Eigen::MatrixXd& columns, double rel_tol) {
  if (columns.size() == 0) return 0;
  Eigen::BDCSVD<Eigen::MatrixXd> svd(columns);
  const Eigen::VectorXd& sigma = svd.singularValues();
  if (sigma.size() == 0 || sigma(0) == 0.0) return 0;
  const double cutoff = rel_tol * std::max(1.0, sigma(0));
  std::int64_t rank = 0;
  while (rank < sigma.size() && sigma(rank) > cutoff) ++rank;
  return rank;
}

std::int64_t IntersectionDim(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b,
                             double rel_tol) {
  if (a.cols() == 0 || b.cols() == 0) return 0;
  if (a.rows() != b.rows()) throw ShapeError("spans live in different spaces");
  Eigen::MatrixXd both(a.rows(), a.cols() + b.cols());
  both << a, b;
  return NumericRank(a, rel_tol) + NumericRank(b, rel_tol) -
         NumericRank(both, rel_tol);
}

SubspaceDims EmpiricalDims(const std::vector<int>& counts, int samples,
                           std::uint64_t seed) {
  const std::int64_t ambient =
      static_cast<std::int64_t>(counts.size()) * Product(counts);
  CheckRankAmbient(ambient);
  Rng rng(seed);
  std::vector<Game> pot, harm, non;
  for (int k = 0; k < samples; ++k) {
    Decomposition parts = Decompose(RandomGame(counts, rng));
    pot.push_back(std::move(parts.potential));
    harm.push_back(std::move(parts.harmonic));
    non.push_back(std::move(parts.nonstrategic));
  }
  const double rel = kDefaultTolerance;
  SubspaceDims d;
  d.potential = NumericRank(StackGames(pot), rel);
  d.harmonic = NumericRank(StackGames(harm), rel);
  d.nonstrategic = NumericRank(StackGames(non), rel);
  std::vector<Game> pn = pot;
  pn.insert(pn.end(), non.begin(), non.end());
  std::vector<Game> hn = harm;
  hn.insert(hn.end(), non.begin(), non.end());
  d.potential_games = NumericRank(StackGames(pn), rel);
  d.harmonic_games = NumericRank(StackGames(hn), rel);
  return d;
}

ZsIiResult ZsIiIntersectionDims(int h, std::uint64_t seed) {
  if (h < 1) throw ShapeError("strategy count must be positive");
  ZsIiResult out;
  const std::int64_t h2 = static_cast<std::int64_t>(h) * h;
  out.closed_form.zero_sum_potential = 2 * h - 1;
  out.closed_form.identical_potential = h2;
  out.closed_form.zero_sum_harmonic = h2 - 2 * h + 2;
  out.closed_form.identical_harmonic = 1;
  if (2 * h2 > kMaxRankAmbient) return out;

  const std::vector<int> counts = {h, h};
  const StrategyShape shape(counts);
  std::vector<Game> zero_sum, identical;
  for (ProfileIndex p = 0; p < shape.num_profiles(); ++p) {
    NodeFunction e(shape.num_profiles(), 0.0);
    e[p] = 1.0;
    NodeFunction neg(shape.num_profiles(), 0.0);
    neg[p] = -1.0;
    zero_sum.emplace_back(shape, std::vector<NodeFunction>{e, neg});
    identical.emplace_back(shape, std::vector<NodeFunction>{e, e});
  }

  const SubspaceBasis non = NonstrategicBasis(counts);
  std::vector<Game> potential_games = non.games;
  std::vector<Game> harmonic_games = non.games;
  const SubspaceBasis harm = HarmonicBasis2p(h, h);
  harmonic_games.insert(harmonic_games.end(), harm.games.begin(),
                        harm.games.end());
  Rng rng(seed);
  for (std::int64_t k = 0; k < h2 + 2; ++k) {
    potential_games.push_back(Decompose(RandomGame(counts, rng)).potential);
  }

  const Eigen::MatrixXd z = StackGames(zero_sum);
  const Eigen::MatrixXd i = StackGames(identical);
  const Eigen::MatrixXd p = StackGames(potential_games);
  const Eigen::MatrixXd hm = StackGames(harmonic_games);
  const double rel = kDefaultTolerance;
  out.computed.zero_sum_potential = IntersectionDim(z, p, rel);
  out.computed.identical_potential = IntersectionDim(i, p, rel);
  out.computed.zero_sum_harmonic = IntersectionDim(z, hm, rel);
  out.computed.identical_harmonic = IntersectionDim(i, hm, rel);
  out.rank_computed = true;
  return out;
}

bool VerifyNormalizedHarmonic(const Game& game, double tol) {
  const StrategyShape& shape = game.shape();
  const double slack = tol * std::max(1.0, MaxAbsPayoff(game));
  for (ProfileIndex p = 0; p < shape.num_profiles(); ++p) {
    double total = 0.0;
    for (int m = 0; m < shape.num_players(); ++m) {
      total += shape.count(m) * game.Utility(m, p);
    }
    if (std::abs(total) > slack * shape.num_players()) return false;
  }
  for (int m = 0; m < shape.num_players(); ++m) {
    const NodeFunction projected =
        ProjectPlayer(shape, m, game.utilities(m));
    const auto u = game.utilities(m);
    for (ProfileIndex p = 0; p < shape.num_profiles(); ++p) {
      if (std::abs(projected[p] - u[p]) > slack) return false;
    }
  }
  return true;
}

}  // namespace gamehodge
