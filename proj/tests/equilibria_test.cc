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

#include <Eigen/Dense>
#include <cmath>

#include "doctest.h"
#include "fixtures.h"
#include "gamehodge/decompose.h"
#include "gamehodge/errors.h"
#include "gamehodge/flow.h"
#include "gamehodge/random.h"
#include "oracles.h"

namespace gamehodge {
namespace {

const std::vector<std::vector<int>> kShapes = {{2, 2}, {2, 3}, {3, 3},
                                               {2, 2, 2}, {3, 2, 2}};

TEST_CASE("pure NE of reference games") {
  CHECK(PureNash(fixtures::BattleOfSexes()) == ProfileSet{0, 3});
  CHECK(PureNash(fixtures::ModifiedBattleOfSexes()) == ProfileSet{0, 3});
  CHECK(PureNash(fixtures::MatchingPennies()).empty());
  CHECK(PureNash(fixtures::ThreePlayerCyclic()).empty());
  CHECK(PureNash(fixtures::GeneralizedRps(1, 1, 1)).empty());
}

TEST_CASE("pure and epsilon NE agree with enumeration") {
  Rng rng(201);
  for (const auto& h : kShapes) {
    for (int k = 0; k < 20; ++k) {
      // Integer payoffs produce ties.
      Game g = RandomGame(h, rng, 0, 3);
      std::vector<NodeFunction> u = g.all_utilities();
      for (auto& f : u) {
        for (double& v : f) v = std::floor(v);
      }
      g = g.WithUtilities(u);
      CHECK(PureNash(g) == oracle::BruteEpsilonNash(g, 0.0));
      for (double eps : {0.0, 0.5, 1.0, 2.0}) {
        CHECK(EpsilonEquilibria(g, eps) == oracle::BruteEpsilonNash(g, eps));
      }
      for (ProfileIndex p = 0; p < g.num_profiles(); ++p) {
        const double gain = MaxDeviationGain(g, p);
        CHECK(gain >= 0.0);
        CHECK(oracle::BruteIsNash(g, p, gain));
      }
    }
  }
  CHECK_THROWS_AS(EpsilonEquilibria(fixtures::BattleOfSexes(), -1.0),
                  PreconditionError);
}

TEST_CASE("pareto optimal profiles agree with enumeration") {
  Rng rng(203);
  for (const auto& h : kShapes) {
    for (int k = 0; k < 20; ++k) {
      const Game g = RandomGame(h, rng);
      CHECK(ParetoOptimal(g) == oracle::BrutePareto(g));
    }
  }
  CHECK(ParetoOptimal(fixtures::BattleOfSexes()) == ProfileSet{0, 3});
}

TEST_CASE("uniformly mixed profile is a mixed NE of harmonic games") {
  Rng rng(205);
  for (const auto& h : kShapes) {
    for (int k = 0; k < 10; ++k) {
      const Game g = RandomHarmonicGame(h, rng);
      CHECK(IsMixedNash(g, UniformlyMixed(g)));
      const IndifferenceReport r = HarmonicIndifferenceChecks(g);
      CHECK(r.ok);
      CHECK(r.pure_nash.empty());
    }
  }
  CHECK(IsMixedNash(fixtures::MatchingPennies(),
                    UniformlyMixed(fixtures::MatchingPennies())));
  CHECK_FALSE(IsMixedNash(fixtures::ZeroSumPotential(),
                          UniformlyMixed(fixtures::ZeroSumPotential())));
}

TEST_CASE("mixed utilities match direct expectation") {
  Rng rng(207);
  const Game g = RandomGame({2, 3, 2}, rng);
  const MixedProfile x = {{0.25, 0.75}, {0.2, 0.3, 0.5}, {0.6, 0.4}};
  const JointDistribution joint = ProductDistribution(g, x);
  const auto profiles = oracle::AllProfiles({2, 3, 2});
  for (int m = 0; m < 3; ++m) {
    double expected = 0.0;
    for (std::size_t p = 0; p < profiles.size(); ++p) {
      expected += joint[p] * g.Utility(m, static_cast<ProfileIndex>(p));
    }
    CHECK(MixedUtility(g, x, m) == doctest::Approx(expected));
  }
  CHECK_THROWS_AS(MixedUtility(g, {{0.5, 0.5}, {1, 0, 0}}, 0),
                  PreconditionError);
  CHECK_THROWS_AS(MixedUtility(g, {{0.5, 0.6}, {1, 0, 0}, {1, 0}}, 0),
                  PreconditionError);
  CHECK_THROWS_AS(IsCorrelatedEquilibrium(g, JointDistribution(12, 0.1)),
                  PreconditionError);
}

TEST_CASE("correlated equilibrium checks") {
  const Game bos = fixtures::BattleOfSexes();
  CHECK(IsCorrelatedEquilibrium(bos, {0.5, 0, 0, 0.5}));
  CHECK(IsCorrelatedEquilibrium(bos, {1, 0, 0, 0}));
  CHECK_FALSE(IsCorrelatedEquilibrium(bos, {0, 1, 0, 0}));
  const Game mp = fixtures::MatchingPennies();
  const JointDistribution uniform(4, 0.25);
  CHECK(IsCorrelatedEquilibrium(mp, uniform));
  CHECK(CorrelatedEqualityViolation(mp, uniform) < 1e-15);
}

TEST_CASE("harmonic correlated system on 2x2 games is the uniform point") {
  Rng rng(209);
  for (int k = 0; k < 10; ++k) {
    const Game g = RandomHarmonicGame({2, 2}, rng);
    const AffineSolutionSet s = HarmonicCorrelatedSystem(g);
    CHECK(s.dimension == 0);
    for (Eigen::Index i = 0; i < s.offset.size(); ++i) {
      CHECK(s.offset(i) == doctest::Approx(0.25));
    }
    CHECK(s.max_violation < 1e-9);
  }
}

TEST_CASE("harmonic correlated system on 3x2 and 2x3 games is a line") {
  Rng rng(211);
  for (const std::vector<int>& h : {std::vector<int>{2, 3}, {3, 2}}) {
    for (int k = 0; k < 10; ++k) {
      const Game g = RandomHarmonicGame(h, rng);
      const AffineSolutionSet s = HarmonicCorrelatedSystem(g);
      CHECK(s.dimension == 1);
      CHECK(s.max_violation < 1e-9);
      // The uniform distribution solves the equalities.
      const JointDistribution uniform(6, 1.0 / 6);
      CHECK(CorrelatedEqualityViolation(g, uniform) < 1e-12);
    }
  }
}

TEST_CASE("harmonic correlated system dimension matches a dense rank oracle") {
  Rng rng(213);
  for (const std::vector<int>& h :
       {std::vector<int>{3, 3}, {2, 4}, {2, 2, 2}, {3, 2, 2}}) {
    const Game g = RandomHarmonicGame(h, rng);
    const AffineSolutionSet s = HarmonicCorrelatedSystem(g);
    // Oracle: build the equalities from explicit tuples.
    const auto profiles = oracle::AllProfiles(h);
    const Eigen::Index n = static_cast<Eigen::Index>(profiles.size());
    std::vector<Eigen::RowVectorXd> rows;
    for (std::size_t m = 0; m < h.size(); ++m) {
      for (int pm = 0; pm < h[m]; ++pm) {
        for (int q = 0; q < h[m]; ++q) {
          Eigen::RowVectorXd r = Eigen::RowVectorXd::Zero(n);
          for (Eigen::Index p = 0; p < n; ++p) {
            if (profiles[p][m] != pm) continue;
            std::vector<int> dev = profiles[p];
            dev[m] = q;
            r(p) = g.Utility(static_cast<int>(m), ProfileIndexOf(dev, h));
          }
          rows.push_back(r);
        }
      }
    }
    rows.push_back(Eigen::RowVectorXd::Ones(n));
    Eigen::MatrixXd a(rows.size(), n);
    for (std::size_t i = 0; i < rows.size(); ++i) a.row(i) = rows[i];
    Eigen::FullPivLU<Eigen::MatrixXd> lu(a);
    lu.setThreshold(1e-9);
    CHECK(s.dimension == n - lu.rank());
    CHECK(s.max_violation < 1e-9);
    if (h.size() > 2) {
      CHECK(s.bounds_consistent);
      CHECK(s.dimension >= s.correlated_lower_bound);
    }
  }
}

TEST_CASE("harmonic correlated system preconditions") {
  CHECK_THROWS_AS(HarmonicCorrelatedSystem(fixtures::BattleOfSexes()),
                  PreconditionError);
  CHECK_THROWS_AS(HarmonicCorrelatedSystem(fixtures::ZeroSumPotential()),
                  PreconditionError);
}

TEST_CASE("epsilon transfer from the closest potential game") {
  Rng rng(215);
  for (const std::vector<int>& h : {std::vector<int>{2, 2}, {2, 3}, {3, 3}}) {
    for (int k = 0; k < 20; ++k) {
      const Game g = RandomGame(h, rng);
      const EpsilonTransfer t = EpsilonTransferBound(g);
      CHECK(t.alpha == doctest::Approx(GameDistance(g, t.closest_potential)));
      double expected = 0.0;
      for (int hm : h) expected = std::max(expected, 2 * t.alpha / std::sqrt(hm));
      CHECK(t.eps_bound == doctest::Approx(expected));
      for (ProfileIndex p : PureNash(t.closest_potential, 1e-12)) {
        CHECK(oracle::BruteIsNash(g, p, t.eps_bound + 1e-12));
      }
    }
  }
}

TEST_CASE("pareto transform aligns NE and pareto optimality") {
  Rng rng(217);
  int tested = 0;
  for (const auto& h : kShapes) {
    for (int k = 0; k < 30; ++k) {
      const Game g = RandomGame(h, rng);
      if (PureNash(g).empty()) continue;
      ++tested;
      const Game t = ParetoAlignTransform(g);
      CHECK(PureNash(t) == PureNash(g));
      CHECK(ParetoOptimal(t) == PureNash(t));
      const GraphPtr graph = GameGraph::Build(g.shape());
      CHECK((PairwiseComparison(graph, g) - PairwiseComparison(graph, t))
                .MaxAbs() < 1e-9);
    }
  }
  CHECK(tested > 20);
  const Game bos = ParetoAlignTransform(fixtures::BattleOfSexes());
  CHECK(ParetoOptimal(bos) == ProfileSet{0, 3});
}

}  // namespace
}  // namespace gamehodge
