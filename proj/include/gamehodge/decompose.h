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

// Potential / harmonic / nonstrategic decomposition of finite games.
//
// For utilities u = {u^m}:
//   phi   = Delta0^+ sum_m Delta0_m u^m     (mean-zero potential)
//   u_P^m = Pi_m phi
//   u_H^m = Pi_m u^m - Pi_m phi
//   u_N^m = u^m - Pi_m u^m
// The three parts are orthogonal under <G, H> = sum_m h_m <u^m, v^m>.

#ifndef GAMEHODGE_DECOMPOSE_H_
#define GAMEHODGE_DECOMPOSE_H_

#include <Eigen/Dense>
#include <optional>

#include "gamehodge/game.h"

namespace gamehodge {

struct DecompositionResiduals {
  // max |u_P + u_H + u_N - u|.
  double reconstruction = 0.0;
  // max |delta0*(D u_H)|; harmonic flows are divergence free.
  double harmonic_divergence = 0.0;
  // max |delta1(D u)|; game flows are curl free.
  double curl = 0.0;
  // ||Delta0 phi - b|| from the Laplacian solve.
  double solver = 0.0;
};

struct Decomposition {
  Game potential;
  Game harmonic;
  Game nonstrategic;
  NodeFunction potential_fn;
  DecompositionResiduals residuals;
};

// Throws NumericError when the Laplacian solve fails.
Decomposition Decompose(const Game& game, double tol = kDefaultTolerance);

// Weighted game inner product and the norm / distance it induces.
double GameInnerProduct(const Game& a, const Game& b);
double GameNorm(const Game& game);
double GameDistance(const Game& a, const Game& b);

// ||u_H|| <= tol * max(1, ||G||).
bool IsPotential(const Game& game, double tol = kDefaultTolerance);
// ||u_P|| <= tol * max(1, ||G||).
bool IsHarmonic(const Game& game, double tol = kDefaultTolerance);
bool IsPotential(const Game& game, const Decomposition& parts,
                 double tol = kDefaultTolerance);
bool IsHarmonic(const Game& game, const Decomposition& parts,
                double tol = kDefaultTolerance);

// Mean-zero exact potential, verified on every comparable pair; empty when the
// game is not a potential game.
std::optional<NodeFunction> PotentialFunction(const Game& game,
                                              double tol = kDefaultTolerance);

// Orthogonal projections onto potential games (P + N) and harmonic games
// (H + N).
Game ClosestPotential(const Game& game);
Game ClosestHarmonic(const Game& game);

struct BimatrixComponents {
  Eigen::MatrixXd potential_row;
  Eigen::MatrixXd potential_col;
  Eigen::MatrixXd harmonic_row;
  Eigen::MatrixXd harmonic_col;
};

// Closed form for normalized square bimatrix games (1^T A = 0, B 1 = 0):
//   S = (A + B) / 2, D = (A - B) / 2, G = (A 1 1^T - 1 1^T B) / (2h),
//   potential = (S + G, S - G), harmonic = (D - G, -D + G).
BimatrixComponents DecomposeBimatrixNormalized(const Eigen::MatrixXd& row,
                                               const Eigen::MatrixXd& col,
                                               double tol = kDefaultTolerance);

}  // namespace gamehodge

#endif  // GAMEHODGE_DECOMPOSE_H_
