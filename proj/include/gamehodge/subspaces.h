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

// Bases and dimension accounting for the subspaces of games.

#ifndef GAMEHODGE_SUBSPACES_H_
#define GAMEHODGE_SUBSPACES_H_

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "gamehodge/game.h"

namespace gamehodge {

enum class SubspaceTag { kNonstrategic, kHarmonic2p, kPotentialSpan, kDerived };

std::string TagName(SubspaceTag tag);

struct SubspaceBasis {
  SubspaceTag tag = SubspaceTag::kDerived;
  StrategyShape shape;
  std::vector<Game> games;
  // Set when the basis is degenerate, e.g. an empty harmonic basis.
  std::string warning;
};

// One game per (m, q^{-m}) with u^m the indicator of the block q^{-m}.
SubspaceBasis NonstrategicBasis(const std::vector<int>& counts);

// Games (h2 A^{ij}, -h1 A^{ij}) for 0 <= i < h1 - 1, 0 <= j < h2 - 1, where
// A^{ij} is +1 at (i, j) and (i+1, j+1) and -1 at (i+1, j) and (i, j+1).
SubspaceBasis HarmonicBasis2p(int h1, int h2);

// A^{ij} as a row-major h1 x h2 matrix.
std::vector<double> HarmonicBasisPattern(int h1, int h2, int i, int j);

struct SubspaceDims {
  std::int64_t potential = 0;
  std::int64_t harmonic = 0;
  std::int64_t nonstrategic = 0;
  std::int64_t potential_games = 0;
  std::int64_t harmonic_games = 0;
};

SubspaceDims ClosedFormDims(const std::vector<int>& counts);

inline constexpr std::int64_t kMaxRankAmbient = 4096;

// Ranks of the potential, harmonic and nonstrategic components of `samples`
// seeded random games. Throws SizeError when M * |E| exceeds kMaxRankAmbient.
SubspaceDims EmpiricalDims(const std::vector<int>& counts, int samples,
                           std::uint64_t seed);

// Games flattened as columns of an (M |E|) x k matrix.
Eigen::MatrixXd StackGames(const std::vector<Game>& games);

// Numeric rank with singular values below rel_tol * max(1, sigma_max) treated
// as zero.
std::int64_t NumericRank(const Eigen::MatrixXd& columns,
                         double rel_tol = kDefaultTolerance);

// dim(A cap B) = dim A + dim B - dim(A + B).
std::int64_t IntersectionDim(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b,
                             double rel_tol = kDefaultTolerance);

struct ZsIiTable {
  // Columns: zero-sum, identical interest. Rows: potential games (P + N),
  // harmonic games (H + N).
  std::int64_t zero_sum_potential = 0;
  std::int64_t identical_potential = 0;
  std::int64_t zero_sum_harmonic = 0;
  std::int64_t identical_harmonic = 0;
};

struct ZsIiResult {
  ZsIiTable closed_form;
  ZsIiTable computed;
  bool rank_computed = false;
};

// Two players with h strategies each. The rank path runs when 2 h^2 fits
// kMaxRankAmbient; otherwise only the closed form is returned.
ZsIiResult ZsIiIntersectionDims(int h, std::uint64_t seed = 1);

// sum_m h_m u^m = 0 at every profile and Pi_m u^m = u^m for every player.
bool VerifyNormalizedHarmonic(const Game& game, double tol = kDefaultTolerance);

}  // namespace gamehodge

#endif  // GAMEHODGE_SUBSPACES_H_
