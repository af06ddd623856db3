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

#include "gamehodge/game.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>

#include "gamehodge/errors.h"
#include "gamehodge/flow.h"

namespace gamehodge {

std::int64_t DefaultMaxNodes() {
  const char* env = std::getenv("GAMEHODGE_MAX_NODES");
  if (env == nullptr || *env == '\0') return kDefaultMaxNodes;
  char* end = nullptr;
  const long long value = std::strtoll(env, &end, 10);
  if (end == env || *end != '\0' || value <= 0) return kDefaultMaxNodes;
  return value;
}

StrategyShape::StrategyShape(std::vector<int> counts, std::int64_t max_nodes)
    : counts_(std::move(counts)) {
  if (counts_.empty()) throw ShapeError("a game needs at least one player");
  num_profiles_ = 1;
  for (int h : counts_) {
    if (h < 1) {
      throw ShapeError("strategy counts must be >= 1, got " +
                       std::to_string(h));
    }
    if (num_profiles_ > max_nodes / h) {
      throw SizeError("joint strategy space exceeds node cap of " +
                      std::to_string(max_nodes));
    }
    num_profiles_ *= h;
  }
  strides_.assign(counts_.size(), 1);
  for (int m = num_players() - 2; m >= 0; --m) {
    strides_[m] = strides_[m + 1] * counts_[m + 1];
  }
}

int StrategyShape::count(int player) const {
  CheckPlayer(player);
  return counts_[player];
}

void StrategyShape::CheckPlayer(int player) const {
  if (player < 0 || player >= num_players()) {
    throw BoundsError("player index " + std::to_string(player) +
                      " out of range for " + std::to_string(num_players()) +
                      " players");
  }
}

ProfileIndex StrategyShape::Index(const Profile& profile) const {
  if (profile.size() != counts_.size()) {
    throw BoundsError("profile has " + std::to_string(profile.size()) +
                      " coordinates, expected " +
                      std::to_string(counts_.size()));
  }
  ProfileIndex index = 0;
  for (std::size_t m = 0; m < counts_.size(); ++m) {
    if (profile[m] < 0 || profile[m] >= counts_[m]) {
      throw BoundsError("strategy " + std::to_string(profile[m]) +
                        " out of range for player " + std::to_string(m));
    }
    index = index * counts_[m] + profile[m];
  }
  return index;
}

Profile StrategyShape::ProfileAt(ProfileIndex index) const {
  if (index < 0 || index >= num_profiles_) {
    throw BoundsError("profile index " + std::to_string(index) +
                      " out of range");
  }
  Profile profile(counts_.size());
  for (int m = num_players() - 1; m >= 0; --m) {
    profile[m] = static_cast<int>(index % counts_[m]);
    index /= counts_[m];
  }
  return profile;
}

ProfileIndex ProfileIndexOf(const Profile& profile,
                            const std::vector<int>& counts) {
  return StrategyShape(counts).Index(profile);
}

Profile ProfileOfIndex(ProfileIndex index, const std::vector<int>& counts) {
  return StrategyShape(counts).ProfileAt(index);
}

Game::Game(StrategyShape shape, std::vector<NodeFunction> utilities,
           GameLabels labels)
    : shape_(std::move(shape)),
      utilities_(std::move(utilities)),
      labels_(std::move(labels)) {
  if (static_cast<int>(utilities_.size()) != shape_.num_players()) {
    throw ShapeError("expected " + std::to_string(shape_.num_players()) +
                     " utility arrays, got " +
                     std::to_string(utilities_.size()));
  }
  for (std::size_t m = 0; m < utilities_.size(); ++m) {
    if (static_cast<std::int64_t>(utilities_[m].size()) !=
        shape_.num_profiles()) {
      throw ShapeError("utility array of player " + std::to_string(m) +
                       " has length " + std::to_string(utilities_[m].size()) +
                       ", expected " + std::to_string(shape_.num_profiles()));
    }
    for (double v : utilities_[m]) {
      if (!std::isfinite(v)) {
        throw ShapeError("non-finite payoff for player " + std::to_string(m));
      }
    }
  }
  if (!labels_.player_names.empty() &&
      static_cast<int>(labels_.player_names.size()) != shape_.num_players()) {
    throw ShapeError("player name count does not match player count");
  }
  if (!labels_.strategy_labels.empty()) {
    if (static_cast<int>(labels_.strategy_labels.size()) !=
        shape_.num_players()) {
      throw ShapeError("strategy label lists do not match player count");
    }
    for (int m = 0; m < shape_.num_players(); ++m) {
      if (static_cast<int>(labels_.strategy_labels[m].size()) !=
          shape_.counts()[m]) {
        throw ShapeError("strategy labels of player " + std::to_string(m) +
                         " do not match its strategy count");
      }
    }
  }
}

Game::Game(std::vector<int> counts, std::vector<NodeFunction> utilities,
           GameLabels labels)
    : Game(StrategyShape(std::move(counts)), std::move(utilities),
           std::move(labels)) {}

Game Game::Zero(const StrategyShape& shape) {
  return Game(shape, std::vector<NodeFunction>(
                         shape.num_players(),
                         NodeFunction(shape.num_profiles(), 0.0)));
}

Game Game::Bimatrix(int rows, int cols, std::vector<double> row_payoffs,
                    std::vector<double> col_payoffs) {
  return Game(std::vector<int>{rows, cols},
              {std::move(row_payoffs), std::move(col_payoffs)});
}

std::span<const double> Game::utilities(int player) const {
  shape_.CheckPlayer(player);
  return utilities_[player];
}

double Game::Utility(int player, const Profile& profile) const {
  shape_.CheckPlayer(player);
  return utilities_[player][shape_.Index(profile)];
}

Game Game::WithUtilities(std::vector<NodeFunction> utilities) const {
  return Game(shape_, std::move(utilities), labels_);
}

namespace {

void RequireSameShape(const Game& a, const Game& b) {
  if (!(a.shape() == b.shape())) {
    throw ShapeError("games have different shapes");
  }
}

}  // namespace

Game Game::operator+(const Game& other) const {
  RequireSameShape(*this, other);
  std::vector<NodeFunction> out = utilities_;
  for (std::size_t m = 0; m < out.size(); ++m) {
    for (std::size_t i = 0; i < out[m].size(); ++i) {
      out[m][i] += other.utilities_[m][i];
    }
  }
  return WithUtilities(std::move(out));
}

Game Game::operator-(const Game& other) const {
  RequireSameShape(*this, other);
  std::vector<NodeFunction> out = utilities_;
  for (std::size_t m = 0; m < out.size(); ++m) {
    for (std::size_t i = 0; i < out[m].size(); ++i) {
      out[m][i] -= other.utilities_[m][i];
    }
  }
  return WithUtilities(std::move(out));
}

Game Game::operator*(double scale) const {
  std::vector<NodeFunction> out = utilities_;
  for (auto& u : out) {
    for (double& v : u) v *= scale;
  }
  return WithUtilities(std::move(out));
}

double MaxAbsDifference(const Game& a, const Game& b) {
  RequireSameShape(a, b);
  double worst = 0.0;
  for (int m = 0; m < a.num_players(); ++m) {
    const auto ua = a.utilities(m);
    const auto ub = b.utilities(m);
    for (std::size_t i = 0; i < ua.size(); ++i) {
      worst = std::max(worst, std::abs(ua[i] - ub[i]));
    }
  }
  return worst;
}

double MaxAbsPayoff(const Game& game) {
  double worst = 0.0;
  for (const auto& u : game.all_utilities()) {
    for (double v : u) worst = std::max(worst, std::abs(v));
  }
  return worst;
}

Game Normalize(const Game& game) {
  std::vector<NodeFunction> out;
  out.reserve(game.num_players());
  for (int m = 0; m < game.num_players(); ++m) {
    out.push_back(ProjectPlayer(game.shape(), m, game.utilities(m)));
  }
  return game.WithUtilities(std::move(out));
}

bool IsNormalized(const Game& game, double tol) {
  const StrategyShape& shape = game.shape();
  for (int m = 0; m < game.num_players(); ++m) {
    const auto u = game.utilities(m);
    const int h = shape.counts()[m];
    for (std::int64_t o = 0; o < shape.num_opponent_profiles(m); ++o) {
      double sum = 0.0;
      for (int k = 0; k < h; ++k) sum += u[shape.FromOpponentIndex(o, m, k)];
      if (std::abs(sum) > tol) return false;
    }
  }
  return true;
}

ZeroSumIdenticalSplit SplitZeroSumIdentical(const Game& game) {
  if (game.num_players() != 2) {
    throw ShapeError("zero-sum / identical-interest split needs two players");
  }
  const auto u1 = game.utilities(0);
  const auto u2 = game.utilities(1);
  const std::size_t n = u1.size();
  NodeFunction z1(n), z2(n), s(n);
  for (std::size_t i = 0; i < n; ++i) {
    z1[i] = 0.5 * (u1[i] - u2[i]);
    z2[i] = -z1[i];
    s[i] = 0.5 * (u1[i] + u2[i]);
  }
  return {game.WithUtilities({std::move(z1), std::move(z2)}),
          game.WithUtilities({s, s})};
}

}  // namespace gamehodge
