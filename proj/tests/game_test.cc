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

#include <cmath>
#include <cstdlib>
#include <limits>
#include <tuple>

#include "doctest.h"
#include "fixtures.h"
#include "gamehodge/errors.h"
#include "gamehodge/flow.h"
#include "gamehodge/random.h"
#include "oracles.h"

namespace gamehodge {
namespace {

TEST_CASE("profile index follows last-player-fastest order") {
  CHECK(ProfileIndexOf({0, 0}, {2, 2}) == 0);
  CHECK(ProfileIndexOf({1, 0}, {2, 2}) == 2);
  // Oracle: position of the tuple in the enumerated profile list.
  const auto all = oracle::AllProfiles({2, 3, 2});
  std::size_t position = 0;
  while (all[position] != std::vector<int>{1, 2, 1}) ++position;
  CHECK(position == 11);
  CHECK(ProfileIndexOf({1, 2, 1}, {2, 3, 2}) == 11);
}

TEST_CASE("profile index is a bijection") {
  for (const std::vector<int>& h :
       {std::vector<int>{2, 2}, {3, 1, 4}, {2, 3, 2}, {5}}) {
    const StrategyShape shape(h);
    const auto all = oracle::AllProfiles(h);
    REQUIRE(static_cast<std::int64_t>(all.size()) == shape.num_profiles());
    for (std::int64_t i = 0; i < shape.num_profiles(); ++i) {
      CHECK(shape.ProfileAt(i) == all[i]);
      CHECK(shape.Index(all[i]) == i);
    }
  }
}

TEST_CASE("profile index rejects out-of-range coordinates") {
  CHECK_THROWS_AS(ProfileIndexOf({2, 0}, {2, 2}), BoundsError);
  CHECK_THROWS_AS(ProfileIndexOf({0, -1}, {2, 2}), BoundsError);
  CHECK_THROWS_AS(ProfileIndexOf({0}, {2, 2}), BoundsError);
  CHECK_THROWS_AS(ProfileOfIndex(4, {2, 2}), BoundsError);
}

TEST_CASE("opponent index helpers are mutually inverse") {
  const StrategyShape shape({3, 2, 4});
  for (int m = 0; m < 3; ++m) {
    for (ProfileIndex p = 0; p < shape.num_profiles(); ++p) {
      const std::int64_t o = shape.OpponentIndex(p, m);
      CHECK(o < shape.num_opponent_profiles(m));
      CHECK(shape.FromOpponentIndex(o, m, shape.Coordinate(p, m)) == p);
    }
  }
}

TEST_CASE("utility lookup") {
  const Game bos = fixtures::BattleOfSexes();
  CHECK(bos.Utility(0, Profile{0, 0}) == 3.0);
  CHECK(bos.Utility(1, Profile{1, 1}) == 3.0);
  const Game zero = Game::Zero(StrategyShape({2, 3}));
  CHECK(zero.Utility(1, Profile{1, 2}) == 0.0);
  CHECK_THROWS_AS(bos.Utility(2, Profile{0, 0}), BoundsError);
}

TEST_CASE("game construction validates input") {
  CHECK_THROWS_AS(Game({2, 2}, {{1, 2, 3}, {1, 2, 3, 4}}), ShapeError);
  CHECK_THROWS_AS(Game({2, 2}, {{1, 2, 3, 4}}), ShapeError);
  const double inf = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(Game({2, 2}, {{1, 2, 3, inf}, {1, 2, 3, 4}}), ShapeError);
  CHECK_THROWS_AS(Game({2, 2}, {{1, 2, 3, 4}, {1, 2, 3, 4}},
                       {{"a", "b"}, {{"x"}, {"x", "y"}}}),
                  ShapeError);
  CHECK_THROWS_AS(StrategyShape({2, 0}), ShapeError);
  CHECK_THROWS_AS(StrategyShape({1000, 1000, 1000}), SizeError);
}

TEST_CASE("node cap can be set through the environment") {
  setenv("GAMEHODGE_MAX_NODES", "100", 1);
  CHECK(DefaultMaxNodes() == 100);
  CHECK_THROWS_AS(StrategyShape({11, 10}), SizeError);
  unsetenv("GAMEHODGE_MAX_NODES");
  CHECK(DefaultMaxNodes() == kDefaultMaxNodes);
}

TEST_CASE("battle of sexes variants normalize to the same game") {
  const Game a = Normalize(fixtures::BattleOfSexes());
  const Game b = Normalize(fixtures::ModifiedBattleOfSexes());
  CHECK(MaxAbsDifference(a, b) < 1e-12);
}

TEST_CASE("matching pennies is already normalized") {
  const Game mp = fixtures::MatchingPennies();
  CHECK(IsNormalized(mp));
  CHECK(MaxAbsDifference(Normalize(mp), mp) == 0.0);
}

TEST_CASE("normalizing generalized RPS removes its known nonstrategic part") {
  for (auto [x, y, z] : {std::tuple{1.0, 0.0, 0.0}, std::tuple{2.0, 1.0, 3.0},
                         std::tuple{1.0 / 3, 1.0 / 3, 1.0 / 3}}) {
    const Game g = fixtures::GeneralizedRps(x, y, z);
    const Game expected = g - fixtures::RpsNonstrategic(x, y, z);
    CHECK(MaxAbsDifference(Normalize(g), expected) < 1e-12);
  }
}

TEST_CASE("is_normalized") {
  CHECK(IsNormalized(fixtures::MatchingPennies()));
  CHECK_FALSE(IsNormalized(fixtures::BattleOfSexes()));
  Rng rng(7);
  for (int k = 0; k < 20; ++k) {
    CHECK(IsNormalized(Normalize(RandomGame({3, 2, 2}, rng))));
  }
}

TEST_CASE("normalize matches the explicit block-mean oracle") {
  Rng rng(11);
  const std::vector<int> h = {3, 2, 4};
  const Game g = RandomGame(h, rng);
  const Game n = Normalize(g);
  for (int m = 0; m < 3; ++m) {
    const NodeFunction expected = oracle::BlockMeanRemoved(h, m, g.utilities(m));
    CHECK(oracle::MaxAbsDiff(n.utilities(m), expected) < 1e-12);
  }
}

TEST_CASE("normalize is idempotent and keeps pairwise comparisons") {
  Rng rng(3);
  for (const std::vector<int>& h :
       {std::vector<int>{2, 2}, {3, 3}, {2, 3, 2}, {4, 1}}) {
    const Game g = RandomGame(h, rng);
    const Game n = Normalize(g);
    CHECK(MaxAbsDifference(Normalize(n), n) < 1e-12);
    const GraphPtr graph = GameGraph::Build(g.shape());
    CHECK((PairwiseComparison(graph, g) - PairwiseComparison(graph, n))
              .MaxAbs() < 1e-12);
  }
}

TEST_CASE("a single-strategy player's utility is entirely nonstrategic") {
  Rng rng(5);
  const Game g = RandomGame({1, 3}, rng);
  const Game n = Normalize(g);
  for (double v : n.utilities(0)) CHECK(v == 0.0);
}

TEST_CASE("zero-sum / identical-interest split") {
  const Game mp = fixtures::MatchingPennies();
  const ZeroSumIdenticalSplit mp_split = SplitZeroSumIdentical(mp);
  CHECK(MaxAbsDifference(mp_split.zero_sum, mp) == 0.0);
  CHECK(MaxAbsPayoff(mp_split.identical_interest) == 0.0);

  const Game ii({2, 2}, {{1, 2, 3, 4}, {1, 2, 3, 4}});
  const ZeroSumIdenticalSplit ii_split = SplitZeroSumIdentical(ii);
  CHECK(MaxAbsPayoff(ii_split.zero_sum) == 0.0);
  CHECK(MaxAbsDifference(ii_split.identical_interest, ii) == 0.0);

  const ZeroSumIdenticalSplit bos = SplitZeroSumIdentical(fixtures::BattleOfSexes());
  CHECK(bos.zero_sum.Utility(0, Profile{0, 0}) == doctest::Approx(0.5));
  CHECK(bos.zero_sum.Utility(1, Profile{0, 0}) == doctest::Approx(-0.5));
  CHECK(bos.identical_interest.Utility(0, Profile{0, 0}) == doctest::Approx(2.5));
  CHECK(bos.identical_interest.Utility(1, Profile{0, 0}) == doctest::Approx(2.5));

  CHECK_THROWS_AS(SplitZeroSumIdentical(fixtures::RoadSharing()), ShapeError);
}

TEST_CASE("zero-sum / identical-interest split reconstructs random games") {
  Rng rng(9);
  for (int k = 0; k < 20; ++k) {
    const Game g = RandomGame({3, 4}, rng);
    const ZeroSumIdenticalSplit s = SplitZeroSumIdentical(g);
    CHECK(MaxAbsDifference(s.zero_sum + s.identical_interest, g) < 1e-15);
    for (ProfileIndex p = 0; p < g.num_profiles(); ++p) {
      CHECK(s.zero_sum.Utility(0, p) + s.zero_sum.Utility(1, p) == 0.0);
      CHECK(s.identical_interest.Utility(0, p) ==
            s.identical_interest.Utility(1, p));
    }
  }
}

TEST_CASE("game arithmetic requires matching shapes") {
  const Game a = Game::Zero(StrategyShape({2, 2}));
  const Game b = Game::Zero(StrategyShape({2, 3}));
  CHECK_THROWS_AS(a + b, ShapeError);
  CHECK_THROWS_AS(MaxAbsDifference(a, b), ShapeError);
}

}  // namespace
}  // namespace gamehodge
