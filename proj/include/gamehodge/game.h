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

#ifndef GAMEHODGE_GAME_H_
#define GAMEHODGE_GAME_H_

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace gamehodge {

inline constexpr double kDefaultTolerance = 1e-9;
inline constexpr std::int64_t kDefaultMaxNodes = 10'000'000;

// Node cap used when none is given explicitly. Reads GAMEHODGE_MAX_NODES from
// the environment and falls back to kDefaultMaxNodes.
std::int64_t DefaultMaxNodes();

using ProfileIndex = std::int64_t;
// 0-based strategy index per player.
using Profile = std::vector<int>;
// Real function on strategy profiles, indexed by ProfileIndex.
using NodeFunction = std::vector<double>;

// Mixed-radix layout of the joint strategy space. The last player varies
// fastest: idx = ((p_1 * h_2 + p_2) * h_3 + ...) .
class StrategyShape {
 public:
  StrategyShape() = default;
  explicit StrategyShape(std::vector<int> counts,
                         std::int64_t max_nodes = DefaultMaxNodes());

  int num_players() const { return static_cast<int>(counts_.size()); }
  int count(int player) const;
  const std::vector<int>& counts() const { return counts_; }
  std::int64_t num_profiles() const { return num_profiles_; }
  std::int64_t stride(int player) const { return strides_[player]; }

  // Number of opponent profiles p^{-m}, i.e. |E| / h_m.
  std::int64_t num_opponent_profiles(int player) const {
    return num_profiles_ / counts_[player];
  }

  ProfileIndex Index(const Profile& profile) const;
  Profile ProfileAt(ProfileIndex index) const;

  // Unchecked hot-path helpers.
  int Coordinate(ProfileIndex index, int player) const {
    return static_cast<int>((index / strides_[player]) % counts_[player]);
  }
  ProfileIndex Deviate(ProfileIndex index, int player, int strategy) const {
    return index + (strategy - Coordinate(index, player)) * strides_[player];
  }
  // Profile with player's coordinate set to 0; identifies the p^{-m} block.
  ProfileIndex BlockBase(ProfileIndex index, int player) const {
    return index - Coordinate(index, player) * strides_[player];
  }
  // Dense index of p^{-m} in 0 .. num_opponent_profiles(player) - 1.
  std::int64_t OpponentIndex(ProfileIndex index, int player) const {
    const std::int64_t low = index % strides_[player];
    const std::int64_t high = index / (strides_[player] * counts_[player]);
    return high * strides_[player] + low;
  }
  // Inverse of OpponentIndex with the player's coordinate set to `strategy`.
  ProfileIndex FromOpponentIndex(std::int64_t opponent, int player,
                                 int strategy) const {
    const std::int64_t low = opponent % strides_[player];
    const std::int64_t high = opponent / strides_[player];
    return (high * counts_[player] + strategy) * strides_[player] + low;
  }

  void CheckPlayer(int player) const;

  bool operator==(const StrategyShape& other) const {
    return counts_ == other.counts_;
  }

 private:
  std::vector<int> counts_;
  std::vector<std::int64_t> strides_;
  std::int64_t num_profiles_ = 0;
};

ProfileIndex ProfileIndexOf(const Profile& profile,
                            const std::vector<int>& counts);
Profile ProfileOfIndex(ProfileIndex index, const std::vector<int>& counts);

// Optional display names. Empty vectors mean "unnamed".
struct GameLabels {
  std::vector<std::string> player_names;
  std::vector<std::vector<std::string>> strategy_labels;
};

// A finite strategic-form game: one utility array per player over the joint
// strategy space. Value type; immutable once constructed.
class Game {
 public:
  Game(StrategyShape shape, std::vector<NodeFunction> utilities,
       GameLabels labels = {});
  Game(std::vector<int> counts, std::vector<NodeFunction> utilities,
       GameLabels labels = {});

  static Game Zero(const StrategyShape& shape);

  // Two-player game from row-major payoff matrices of size h1 x h2.
  static Game Bimatrix(int rows, int cols, std::vector<double> row_payoffs,
                       std::vector<double> col_payoffs);

  const StrategyShape& shape() const { return shape_; }
  int num_players() const { return shape_.num_players(); }
  std::int64_t num_profiles() const { return shape_.num_profiles(); }
  int strategy_count(int player) const { return shape_.count(player); }
  const GameLabels& labels() const { return labels_; }

  std::span<const double> utilities(int player) const;
  const std::vector<NodeFunction>& all_utilities() const { return utilities_; }
  double Utility(int player, const Profile& profile) const;
  double Utility(int player, ProfileIndex index) const {
    return utilities_[player][index];
  }

  // Same labels and shape, new payoffs.
  Game WithUtilities(std::vector<NodeFunction> utilities) const;

  Game operator+(const Game& other) const;
  Game operator-(const Game& other) const;
  Game operator*(double scale) const;
  friend Game operator*(double scale, const Game& game) { return game * scale; }

 private:
  StrategyShape shape_;
  std::vector<NodeFunction> utilities_;
  GameLabels labels_;
};

// Largest entrywise payoff difference; throws ShapeError on mismatch.
double MaxAbsDifference(const Game& a, const Game& b);
double MaxAbsPayoff(const Game& game);

// Unique strategically equivalent game whose payoffs sum to zero over each
// player's own strategies: u^m(p) - (1/h_m) sum_{q^m} u^m(q^m, p^{-m}).
Game Normalize(const Game& game);
bool IsNormalized(const Game& game, double tol = kDefaultTolerance);

struct ZeroSumIdenticalSplit {
  Game zero_sum;
  Game identical_interest;
};

// ((u1 - u2)/2, (u2 - u1)/2) + ((u1 + u2)/2, (u1 + u2)/2). Two players only.
ZeroSumIdenticalSplit SplitZeroSumIdentical(const Game& game);

}  // namespace gamehodge

#endif  // GAMEHODGE_GAME_H_
