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

// Equilibrium and efficiency analysis by enumeration: pure and epsilon Nash,
// mixed and correlated equilibrium checks, the correlated equilibrium system
// of harmonic games, and Pareto optimality.

#ifndef GAMEHODGE_EQUILIBRIA_H_
#define GAMEHODGE_EQUILIBRIA_H_

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "gamehodge/game.h"

namespace gamehodge {

// Profile indices in increasing order.
using ProfileSet = std::vector<ProfileIndex>;

// x[m][s] is the probability that player m plays s.
using MixedProfile = std::vector<std::vector<double>>;

// Probability of each profile, indexed by ProfileIndex.
using JointDistribution = std::vector<double>;

inline constexpr double kSimplexTolerance = 1e-12;

// Largest gain any single player obtains by deviating from p.
double MaxDeviationGain(const Game& game, ProfileIndex p);

// Profiles where no unilateral deviation gains more than `tol`.
ProfileSet PureNash(const Game& game, double tol = 0.0);

// Profiles where no unilateral deviation gains more than eps. Throws
// PreconditionError for negative eps.
ProfileSet EpsilonEquilibria(const Game& game, double eps);

struct EpsilonTransfer {
  Game closest_potential;
  // ||G - closest_potential||.
  double alpha;
  // max_m 2 alpha / sqrt(h_m); every pure NE of closest_potential is an
  // eps_bound-equilibrium of G.
  double eps_bound;
};

EpsilonTransfer EpsilonTransferBound(const Game& game);

// Throws PreconditionError unless every x^m is a simplex point within
// kSimplexTolerance.
void CheckMixedProfile(const Game& game, const MixedProfile& x);
void CheckJointDistribution(const Game& game, const JointDistribution& x);

MixedProfile UniformlyMixed(const Game& game);

// u^m(s, x^{-m}) for every own strategy s.
std::vector<double> DeviationPayoffs(const Game& game, const MixedProfile& x,
                                     int player);
// u^m(x).
double MixedUtility(const Game& game, const MixedProfile& x, int player);

bool IsMixedNash(const Game& game, const MixedProfile& x,
                 double tol = kDefaultTolerance);

// Joint distribution prod_m x^m(p^m).
JointDistribution ProductDistribution(const Game& game, const MixedProfile& x);

// Largest violation of the incentive constraints
//   sum_{p^{-m}} (u^m(p^m, p^{-m}) - u^m(q^m, p^{-m})) x(p^m, p^{-m}) >= 0.
double CorrelatedViolation(const Game& game, const JointDistribution& x);
bool IsCorrelatedEquilibrium(const Game& game, const JointDistribution& x,
                             double tol = kDefaultTolerance);

// Largest |sum_{p^{-m}} (u^m(p^m, p^{-m}) - u^m(q^m, p^{-m})) x(p^m, p^{-m})|,
// the equality form the incentive constraints take in harmonic games.
double CorrelatedEqualityViolation(const Game& game,
                                   const JointDistribution& x);

// Affine hull {offset + generators * t} of the solutions of
//   sum_{p^{-m}} u^m(q^m, p^{-m}) x(p^m, p^{-m}) = 0   for all m, p^m, q^m,
//   sum_p x(p) = 1.
struct AffineSolutionSet {
  Eigen::VectorXd offset;
  // One column per free direction.
  Eigen::MatrixXd generators;
  int dimension = 0;
  // Largest equality residual over the offset and each generator.
  double max_violation = 0.0;
  // For M > 2: the correlated lower bound n - 1 - sum_m h_m (h_m - 1) and the
  // mixed upper bound sum_m (h_m - 1). Zero for two players.
  std::int64_t correlated_lower_bound = 0;
  std::int64_t mixed_upper_bound = 0;
  bool bounds_consistent = true;
};

inline constexpr std::int64_t kMaxCorrelatedSystemProfiles = 4096;

// Requires a normalized harmonic game (PreconditionError otherwise). Singular
// values below 1e-9 * sigma_max count as zero.
AffineSolutionSet HarmonicCorrelatedSystem(const Game& game,
                                           double tol = kDefaultTolerance);

struct IndifferenceReport {
  // max over m, q^m, r^m of |sum_{p^{-m}} u^m(r^m, p^{-m}) - u^m(q^m, p^{-m})|.
  double flux_violation = 0.0;
  ProfileSet pure_nash;
  // max over pure NE p, players m and strategies s of |u^m(s, p^{-m}) - u^m(p)|.
  double indifference_violation = 0.0;
  bool ok = true;
  std::vector<std::string> violations;
};

IndifferenceReport HarmonicIndifferenceChecks(const Game& game,
                                              double tol = kDefaultTolerance);

// Profiles not weakly dominated by another profile with a strict gain for at
// least one player.
ProfileSet ParetoOptimal(const Game& game);

// Nonstrategic modification with unchanged pairwise comparisons: payoffs are
// zero at every pure NE, u^m(p) - u^m(r) when p shares its p^{-m} block with a
// pure NE r, and u^m(p) - alpha elsewhere. When the game has a pure NE, the
// pure NE of the output are exactly its Pareto optimal profiles.
Game ParetoAlignTransform(const Game& game);

}  // namespace gamehodge

#endif  // GAMEHODGE_EQUILIBRIA_H_
