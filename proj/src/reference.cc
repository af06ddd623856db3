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

#include "gamehodge/reference.h"

namespace gamehodge::reference {

std::vector<double> PairwiseComparison(const GameGraph& graph,
                                       const Game& game) {
  std::vector<double> out(graph.num_edges(), 0.0);
  for (std::int64_t e = 0; e < graph.num_edges(); ++e) {
    const Edge edge = graph.EdgeAt(e);
    out[e] = game.Utility(edge.player, edge.head) -
             game.Utility(edge.player, edge.tail);
  }
  return out;
}

std::vector<double> Gradient(const GameGraph& graph,
                             std::span<const double> phi) {
  std::vector<double> out(graph.num_edges(), 0.0);
  for (std::int64_t e = 0; e < graph.num_edges(); ++e) {
    const Edge edge = graph.EdgeAt(e);
    out[e] = phi[edge.head] - phi[edge.tail];
  }
  return out;
}

NodeFunction DivergenceAdjoint(const GameGraph& graph,
                               std::span<const double> flow) {
  NodeFunction out(graph.num_nodes(), 0.0);
  for (std::int64_t e = 0; e < graph.num_edges(); ++e) {
    const Edge edge = graph.EdgeAt(e);
    out[edge.tail] -= flow[e];
    out[edge.head] += flow[e];
  }
  return out;
}

NodeFunction LaplacianApply(const GameGraph& graph,
                            std::span<const double> phi) {
  NodeFunction out(graph.num_nodes(), 0.0);
  for (std::int64_t e = 0; e < graph.num_edges(); ++e) {
    const Edge edge = graph.EdgeAt(e);
    const double d = phi[edge.tail] - phi[edge.head];
    out[edge.tail] += d;
    out[edge.head] -= d;
  }
  return out;
}

NodeFunction ProjectPlayer(const StrategyShape& shape, int player,
                           std::span<const double> u) {
  NodeFunction out(shape.num_profiles(), 0.0);
  const int h = shape.count(player);
  for (ProfileIndex p = 0; p < shape.num_profiles(); ++p) {
    Profile profile = shape.ProfileAt(p);
    double mean = 0.0;
    for (int s = 0; s < h; ++s) {
      profile[player] = s;
      mean += u[shape.Index(profile)];
    }
    out[p] = u[p] - mean / h;
  }
  return out;
}

ProfileSet PureNash(const Game& game) {
  const StrategyShape& shape = game.shape();
  ProfileSet out;
  for (ProfileIndex p = 0; p < shape.num_profiles(); ++p) {
    const Profile profile = shape.ProfileAt(p);
    bool stable = true;
    for (int m = 0; m < shape.num_players() && stable; ++m) {
      Profile deviation = profile;
      for (int s = 0; s < shape.count(m); ++s) {
        deviation[m] = s;
        if (game.Utility(m, deviation) > game.Utility(m, profile)) {
          stable = false;
          break;
        }
      }
    }
    if (stable) out.push_back(p);
  }
  return out;
}

ProfileSet ParetoOptimal(const Game& game) {
  const std::int64_t n = game.num_profiles();
  ProfileSet out;
  for (ProfileIndex p = 0; p < n; ++p) {
    bool dominated = false;
    for (ProfileIndex q = 0; q < n && !dominated; ++q) {
      int better = 0;
      int worse = 0;
      for (int m = 0; m < game.num_players(); ++m) {
        const double d = game.Utility(m, q) - game.Utility(m, p);
        better += d > 0.0;
        worse += d < 0.0;
      }
      dominated = better > 0 && worse == 0;
    }
    if (!dominated) out.push_back(p);
  }
  return out;
}

}  // namespace gamehodge::reference
