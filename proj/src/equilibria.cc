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

#include "gamehodge/equilibria.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "gamehodge/decompose.h"
#include "gamehodge/errors.h"

namespace gamehodge {
namespace {

constexpr std::int64_t kParallelGrain = 1024;

ProfileSet CollectFlags(const std::vector<char>& flags) {
  ProfileSet out;
  for (std::size_t i = 0; i < flags.size(); ++i) {
    if (flags[i]) out.push_back(static_cast<ProfileIndex>(i));
  }
  return out;
}

// S_m(s) = sum_{p^{-m}} u^m(s, p^{-m}).
std::vector<double> OwnStrategyTotals(const Game& game, int player) {
  const StrategyShape& shape = game.shape();
  std::vector<double> totals(shape.count(player), 0.0);
  const auto u = game.utilities(player);
  for (ProfileIndex p = 0; p < shape.num_profiles(); ++p) {
    totals[shape.Coordinate(p, player)] += u[p];
  }
  return totals;
}

}  // namespace

double MaxDeviationGain(const Game& game, ProfileIndex p) {
  const StrategyShape& shape = game.shape();
  double gain = -std::numeric_limits<double>::infinity();
  for (int m = 0; m < shape.num_players(); ++m) {
    const auto u = game.utilities(m);
    const ProfileIndex base = shape.BlockBase(p, m);
    const std::int64_t stride = shape.stride(m);
    for (int s = 0; s < shape.count(m); ++s) {
      gain = std::max(gain, u[base + s * stride] - u[p]);
    }
  }
  return gain;
}

ProfileSet PureNash(const Game& game, double tol) {
  const std::int64_t n = game.num_profiles();
  std::vector<char> flags(n, 0);
#pragma omp parallel for schedule(static) if (n > kParallelGrain)
  for (std::int64_t p = 0; p < n; ++p) {
    flags[p] = MaxDeviationGain(game, p) <= tol ? 1 : 0;
  }
  return CollectFlags(flags);
}

ProfileSet EpsilonEquilibria(const Game& game, double eps) {
  if (!(eps >= 0.0)) throw PreconditionError("eps must be nonnegative");
  return PureNash(game, eps);
}

EpsilonTransfer EpsilonTransferBound(const Game& game) {
  Game closest = ClosestPotential(game);
  const double alpha = GameDistance(game, closest);
  double bound = 0.0;
  for (int h : game.shape().counts()) {
    bound = std::max(bound, 2.0 * alpha / std::sqrt(static_cast<double>(h)));
  }
  return {std::move(closest), alpha, bound};
}

void CheckMixedProfile(const Game& game, const MixedProfile& x) {
  if (static_cast<int>(x.size()) != game.num_players()) {
    throw PreconditionError("mixed profile needs one distribution per player");
  }
  for (int m = 0; m < game.num_players(); ++m) {
    if (static_cast<int>(x[m].size()) != game.strategy_count(m)) {
      throw PreconditionError("mixed strategy length does not match player " +
                              std::to_string(m));
    }
    double total = 0.0;
    for (double v : x[m]) {
      if (!std::isfinite(v) || v < 0.0) {
        throw PreconditionError("mixed strategy has a negative entry");
      }
      total += v;
    }
    if (std::abs(total - 1.0) > kSimplexTolerance) {
      throw PreconditionError("mixed strategy of player " + std::to_string(m) +
                              " does not sum to 1");
    }
  }
}

void CheckJointDistribution(const Game& game, const JointDistribution& x) {
  if (static_cast<std::int64_t>(x.size()) != game.num_profiles()) {
    throw PreconditionError("joint distribution length does not match game");
  }
  double total = 0.0;
  for (double v : x) {
    if (!std::isfinite(v) || v < 0.0) {
      throw PreconditionError("joint distribution has a negative entry");
    }
    total += v;
  }
  if (std::abs(total - 1.0) > kSimplexTolerance) {
    throw PreconditionError("joint distribution does not sum to 1");
  }
}

MixedProfile UniformlyMixed(const Game& game) {
  MixedProfile x;
  for (int h : game.shape().counts()) {
    x.emplace_back(h, 1.0 / static_cast<double>(h));
  }
  return x;
}

std::vector<double> DeviationPayoffs(const Game& game, const MixedProfile& x,
                                     int player) {
  CheckMixedProfile(game, x);
  const StrategyShape& shape = game.shape();
  shape.CheckPlayer(player);
  std::vector<double> out(shape.count(player), 0.0);
  const auto u = game.utilities(player);
  for (ProfileIndex p = 0; p < shape.num_profiles(); ++p) {
    double weight = 1.0;
    for (int k = 0; k < shape.num_players(); ++k) {
      if (k != player) weight *= x[k][shape.Coordinate(p, k)];
    }
    out[shape.Coordinate(p, player)] += weight * u[p];
  }
  return out;
}

double MixedUtility(const Game& game, const MixedProfile& x, int player) {
  const std::vector<double> dev = DeviationPayoffs(game, x, player);
  double value = 0.0;
  for (std::size_t s = 0; s < dev.size(); ++s) value += x[player][s] * dev[s];
  return value;
}

bool IsMixedNash(const Game& game, const MixedProfile& x, double tol) {
  CheckMixedProfile(game, x);
  for (int m = 0; m < game.num_players(); ++m) {
    const std::vector<double> dev = DeviationPayoffs(game, x, m);
    double value = 0.0;
    for (std::size_t s = 0; s < dev.size(); ++s) value += x[m][s] * dev[s];
    for (double d : dev) {
      if (d > value + tol) return false;
    }
  }
  return true;
}

JointDistribution ProductDistribution(const Game& game, const MixedProfile& x) {
  CheckMixedProfile(game, x);
  const StrategyShape& shape = game.shape();
  JointDistribution out(shape.num_profiles(), 1.0);
  for (ProfileIndex p = 0; p < shape.num_profiles(); ++p) {
    for (int k = 0; k < shape.num_players(); ++k) {
      out[p] *= x[k][shape.Coordinate(p, k)];
    }
  }
  return out;
}

namespace {

// Calls f(m, p^m, q^m, value) with value the incentive expression
// sum_{p^{-m}} (u^m(p^m, p^{-m}) - u^m(q^m, p^{-m})) x(p^m, p^{-m}).
template <typename F>
void ForEachIncentive(const Game& game, const JointDistribution& x, F&& f) {
  const StrategyShape& shape = game.shape();
  for (int m = 0; m < shape.num_players(); ++m) {
    const int h = shape.count(m);
    const auto u = game.utilities(m);
    const std::int64_t stride = shape.stride(m);
    std::vector<double> value(static_cast<std::size_t>(h) * h, 0.0);
    for (ProfileIndex p = 0; p < shape.num_profiles(); ++p) {
      if (x[p] == 0.0) continue;
      const int pm = shape.Coordinate(p, m);
      const ProfileIndex base = shape.BlockBase(p, m);
      for (int q = 0; q < h; ++q) {
        value[pm * h + q] += (u[p] - u[base + q * stride]) * x[p];
      }
    }
    for (int pm = 0; pm < h; ++pm) {
      for (int q = 0; q < h; ++q) f(m, pm, q, value[pm * h + q]);
    }
  }
}

}  // namespace

double CorrelatedViolation(const Game& game, const JointDistribution& x) {
  CheckJointDistribution(game, x);
  double worst = 0.0;
  ForEachIncentive(game, x, [&](int, int, int, double v) {
    worst = std::max(worst, -v);
  });
  return worst;
}

bool IsCorrelatedEquilibrium(const Game& game, const JointDistribution& x,
                             double tol) {
  return CorrelatedViolation(game, x) <= tol;
}

double CorrelatedEqualityViolation(const Game& game,
                                   const JointDistribution& x) {
  CheckJointDistribution(game, x);
  double worst = 0.0;
  ForEachIncentive(game, x, [&](int, int, int, double v) {
    worst = std::max(worst, std::abs(v));
  });
  return worst;
}

AffineSolutionSet HarmonicCorrelatedSystem(const Game& game, double tol) {
  const StrategyShape& shape = game.shape();
  const std::int64_t n = shape.num_profiles();
  if (n > kMaxCorrelatedSystemProfiles) {
    throw SizeError("correlated system limited to " +
                    std::to_string(kMaxCorrelatedSystemProfiles) +
                    " profiles");
  }
  const double scale = std::max(1.0, MaxAbsPayoff(game));
  if (!IsNormalized(game, tol * scale)) {
    throw PreconditionError("correlated system needs a normalized game");
  }
  if (!IsHarmonic(game, tol)) {
    throw PreconditionError("correlated system needs a harmonic game");
  }

  std::int64_t rows = 1;
  for (int h : shape.counts()) rows += static_cast<std::int64_t>(h) * h;
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(rows, n);
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(rows);
  std::int64_t row = 0;
  for (int m = 0; m < shape.num_players(); ++m) {
    const int h = shape.count(m);
    const auto u = game.utilities(m);
    for (ProfileIndex p = 0; p < n; ++p) {
      const int pm = shape.Coordinate(p, m);
      const ProfileIndex base = shape.BlockBase(p, m);
      for (int q = 0; q < h; ++q) {
        a(row + pm * h + q, p) = u[base + q * shape.stride(m)];
      }
    }
    row += static_cast<std::int64_t>(h) * h;
  }
  a.row(row).setOnes();
  rhs(row) = 1.0;

  Eigen::BDCSVD<Eigen::MatrixXd> svd(a,
                                     Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd& sigma = svd.singularValues();
  const double cutoff = 1e-9 * (sigma.size() > 0 ? sigma(0) : 0.0);
  Eigen::Index rank = 0;
  while (rank < sigma.size() && sigma(rank) > cutoff) ++rank;

  AffineSolutionSet out;
  const Eigen::MatrixXd vk = svd.matrixV().leftCols(rank);
  out.offset = vk * (svd.matrixU().leftCols(rank).transpose() * rhs)
                        .cwiseQuotient(sigma.head(rank));
  out.dimension = static_cast<int>(n - rank);
  if (out.dimension > 0) {
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(vk);
    const Eigen::MatrixXd q = qr.householderQ();
    out.generators = q.rightCols(out.dimension);
  } else {
    out.generators = Eigen::MatrixXd::Zero(n, 0);
  }
  out.max_violation = (a * out.offset - rhs).cwiseAbs().maxCoeff();
  if (out.dimension > 0) {
    out.max_violation = std::max(
        out.max_violation, (a * out.generators).cwiseAbs().maxCoeff());
  }

  if (shape.num_players() > 2) {
    std::int64_t equalities = 0;
    std::int64_t mixed = 0;
    for (int h : shape.counts()) {
      equalities += static_cast<std::int64_t>(h) * (h - 1);
      mixed += h - 1;
    }
    out.correlated_lower_bound = n - 1 - equalities;
    out.mixed_upper_bound = mixed;
    out.bounds_consistent = out.dimension >= out.correlated_lower_bound;
  }
  return out;
}

IndifferenceReport HarmonicIndifferenceChecks(const Game& game, double tol) {
  IndifferenceReport report;
  const StrategyShape& shape = game.shape();
  const double slack = tol * std::max(1.0, MaxAbsPayoff(game)) *
                       static_cast<double>(shape.num_profiles());
  for (int m = 0; m < shape.num_players(); ++m) {
    const std::vector<double> totals = OwnStrategyTotals(game, m);
    const auto [lo, hi] = std::minmax_element(totals.begin(), totals.end());
    const double spread = *hi - *lo;
    report.flux_violation = std::max(report.flux_violation, spread);
    if (spread > slack) {
      std::ostringstream msg;
      msg << "flux identity fails for player " << m << " (spread " << spread
          << ")";
      report.violations.push_back(msg.str());
    }
  }
  const double ne_slack = tol * std::max(1.0, MaxAbsPayoff(game));
  report.pure_nash = PureNash(game, ne_slack);
  for (ProfileIndex p : report.pure_nash) {
    for (int m = 0; m < shape.num_players(); ++m) {
      const auto u = game.utilities(m);
      const ProfileIndex base = shape.BlockBase(p, m);
      for (int s = 0; s < shape.count(m); ++s) {
        const double gap = std::abs(u[base + s * shape.stride(m)] - u[p]);
        report.indifference_violation =
            std::max(report.indifference_violation, gap);
        if (gap > ne_slack) {
          std::ostringstream msg;
          msg << "player " << m << " is not indifferent at pure NE " << p;
          report.violations.push_back(msg.str());
        }
      }
    }
  }
  report.ok = report.violations.empty();
  return report;
}

ProfileSet ParetoOptimal(const Game& game) {
  const std::int64_t n = game.num_profiles();
  const int players = game.num_players();
  std::vector<char> flags(n, 1);
#pragma omp parallel for schedule(dynamic, 16) if (n > 64)
  for (std::int64_t p = 0; p < n; ++p) {
    for (std::int64_t q = 0; q < n && flags[p]; ++q) {
      bool weak = true;
      bool strict = false;
      for (int m = 0; m < players && weak; ++m) {
        const double up = game.Utility(m, p);
        const double uq = game.Utility(m, q);
        if (uq < up) weak = false;
        if (uq > up) strict = true;
      }
      if (weak && strict) flags[p] = 0;
    }
  }
  return CollectFlags(flags);
}

Game ParetoAlignTransform(const Game& game) {
  const StrategyShape& shape = game.shape();
  const std::int64_t n = shape.num_profiles();
  const ProfileSet nash = PureNash(game);
  std::vector<char> is_nash(n, 0);
  for (ProfileIndex p : nash) is_nash[p] = 1;

  // Stage 1: subtract the payoff of a pure NE sharing p's p^{-m} block. All
  // pure NE in one block give player m the same payoff.
  std::vector<NodeFunction> hat(game.num_players());
  std::vector<std::vector<char>> covered(game.num_players());
  for (int m = 0; m < game.num_players(); ++m) {
    const auto u = game.utilities(m);
    const std::int64_t blocks = shape.num_opponent_profiles(m);
    std::vector<double> anchor(blocks, 0.0);
    std::vector<char> has(blocks, 0);
    for (ProfileIndex r : nash) {
      const std::int64_t o = shape.OpponentIndex(r, m);
      has[o] = 1;
      anchor[o] = u[r];
    }
    hat[m].resize(n);
    covered[m].resize(n);
    for (ProfileIndex p = 0; p < n; ++p) {
      const std::int64_t o = shape.OpponentIndex(p, m);
      covered[m][p] = has[o];
      if (is_nash[p]) {
        hat[m][p] = 0.0;
      } else if (has[o]) {
        hat[m][p] = u[p] - anchor[o];
      } else {
        hat[m][p] = u[p];
      }
    }
  }

  // Stage 2: push every payoff outside the NE blocks below the NE level.
  double top = -std::numeric_limits<double>::infinity();
  for (const NodeFunction& f : hat) {
    for (double v : f) top = std::max(top, v);
  }
  const double alpha = 1.0 + top;
  for (int m = 0; m < game.num_players(); ++m) {
    for (ProfileIndex p = 0; p < n; ++p) {
      if (!covered[m][p]) hat[m][p] -= alpha;
    }
  }
  return game.WithUtilities(std::move(hat));
}

}  // namespace gamehodge
