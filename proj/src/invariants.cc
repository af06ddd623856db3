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

#include "gamehodge/invariants.h"

#include <algorithm>
#include <cmath>

#include "gamehodge/decompose.h"
#include "gamehodge/flow.h"
#include "gamehodge/random.h"

namespace gamehodge {
namespace {

double MaxAbsDiff(std::span<const double> a, std::span<const double> b) {
  double out = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    out = std::max(out, std::abs(a[i] - b[i]));
  }
  return out;
}

double BlockSumViolation(const Game& game) {
  const StrategyShape& shape = game.shape();
  double worst = 0.0;
  for (int m = 0; m < shape.num_players(); ++m) {
    const auto u = game.utilities(m);
    for (std::int64_t o = 0; o < shape.num_opponent_profiles(m); ++o) {
      double total = 0.0;
      for (int s = 0; s < shape.count(m); ++s) {
        total += u[shape.FromOpponentIndex(o, m, s)];
      }
      worst = std::max(worst, std::abs(total));
    }
  }
  return worst;
}

}  // namespace

std::vector<InvariantCheck> VerifyGame(const Game& game, double tol,
                                       std::uint64_t seed) {
  std::vector<InvariantCheck> out;
  auto add = [&out](std::string name, double violation, double limit) {
    out.push_back({std::move(name), violation, limit, violation <= limit});
  };

  const StrategyShape& shape = game.shape();
  const double scale = std::max(1.0, MaxAbsPayoff(game));
  const double abs_limit = tol * scale;
  const GraphPtr graph = GameGraph::Build(shape);
  const Decomposition parts = Decompose(game, tol);
  const EdgeFlow flow = PairwiseComparison(graph, game);

  add("reconstruction", parts.residuals.reconstruction, abs_limit);

  const double total = GameNorm(game);
  const double split = std::sqrt(std::pow(GameNorm(parts.potential), 2) +
                                 std::pow(GameNorm(parts.harmonic), 2) +
                                 std::pow(GameNorm(parts.nonstrategic), 2));
  add("pythagorean_identity",
      std::abs(total * total - split * split) / std::max(1.0, total * total),
      1e-8);

  add("potential_part_normalized", BlockSumViolation(parts.potential),
      abs_limit);
  add("harmonic_part_normalized", BlockSumViolation(parts.harmonic), abs_limit);

  const EdgeFlow grad = Gradient(graph, parts.potential_fn);
  add("potential_flow_is_gradient",
      (PairwiseComparison(graph, parts.potential) - grad).MaxAbs(), abs_limit);
  add("harmonic_divergence_free", parts.residuals.harmonic_divergence,
      abs_limit);
  add("nonstrategic_flow_zero",
      PairwiseComparison(graph, parts.nonstrategic).MaxAbs(), abs_limit);
  add("game_flow_curl_free", parts.residuals.curl, abs_limit);
  add("comparison_consistency",
      (grad + PairwiseComparison(graph, parts.harmonic) - flow).MaxAbs(),
      abs_limit);

  const Decomposition of_p = Decompose(parts.potential, tol);
  const Decomposition of_h = Decompose(parts.harmonic, tol);
  const Decomposition of_n = Decompose(parts.nonstrategic, tol);
  const double idempotence = std::max(
      {MaxAbsDifference(of_p.potential, parts.potential),
       MaxAbsDifference(of_h.harmonic, parts.harmonic),
       MaxAbsDifference(of_n.nonstrategic, parts.nonstrategic),
       MaxAbsPayoff(of_p.harmonic), MaxAbsPayoff(of_p.nonstrategic),
       MaxAbsPayoff(of_h.potential), MaxAbsPayoff(of_h.nonstrategic),
       MaxAbsPayoff(of_n.potential), MaxAbsPayoff(of_n.harmonic)});
  add("decompose_idempotent", idempotence, 10.0 * abs_limit);

  const Decomposition of_normal = Decompose(Normalize(game), tol);
  add("strategic_equivalence",
      std::max(MaxAbsDifference(of_normal.potential, parts.potential),
               MaxAbsDifference(of_normal.harmonic, parts.harmonic)),
      abs_limit);

  Rng rng(seed);
  const NodeFunction phi = RandomNodeFunction(shape.num_profiles(), rng);
  const double lhs = InnerProduct(Gradient(graph, phi), flow);
  const double rhs = InnerProduct(phi, DivergenceAdjoint(flow));
  // Sums over many terms; the limit grows with their count.
  const double sum_limit =
      abs_limit * std::sqrt(static_cast<double>(shape.num_profiles()));
  add("adjointness", std::abs(lhs - rhs), sum_limit);

  double lemma = 0.0;
  for (int m = 0; m < shape.num_players(); ++m) {
    NodeFunction scaled = ProjectPlayer(shape, m, phi);
    for (double& v : scaled) v *= shape.count(m);
    lemma = std::max(lemma,
                     MaxAbsDiff(PlayerLaplacianApply(shape, m, phi), scaled));
  }
  add("player_laplacian_identity", lemma, tol);

  // Net flow out of a random node subset equals the summed divergence.
  std::bernoulli_distribution coin(0.5);
  std::vector<char> in_set(shape.num_profiles());
  for (char& c : in_set) c = coin(rng);
  const NodeFunction div = DivergenceAdjoint(flow);
  double inside = 0.0;
  double boundary = 0.0;
  for (ProfileIndex p = 0; p < shape.num_profiles(); ++p) {
    if (!in_set[p]) continue;
    inside += div[p];
    for (int m = 0; m < shape.num_players(); ++m) {
      for (int s = 0; s < shape.count(m); ++s) {
        const ProfileIndex q = shape.Deviate(p, m, s);
        if (q != p && !in_set[q]) boundary += flow(p, q);
      }
    }
  }
  add("flux_identity", std::abs(inside + boundary), sum_limit);
  return out;
}

bool AllPassed(const std::vector<InvariantCheck>& checks) {
  return std::all_of(checks.begin(), checks.end(),
                     [](const InvariantCheck& c) { return c.ok; });
}

}  // namespace gamehodge
