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

// Game graph and the combinatorial calculus on it.
//
// Nodes are strategy profiles; two profiles are joined by an edge iff they
// differ in exactly one player's strategy (that player is the edge's owner).
// The graph is the direct product of one clique per player. Edge flows are
// stored once per undirected edge on the orientation of increasing profile
// index; evaluating the reverse orientation negates the stored value.
//
// Operator conventions:
//   Gradient                (delta0 phi)(p,q)  = phi(q) - phi(p)
//   DivergenceAdjoint       (delta0* X)(p)     = -sum_q X(p,q)
//   Curl                    (delta1 X)(p,q,r)  = X(p,q) + X(q,r) + X(r,p)
//   PlayerGradient          D_m: gradient restricted to player-m edges
//   PlayerDivergenceAdjoint D_m* = delta0* restricted to player-m edges
//   ProjectPlayer           Pi_m: removes the mean over player m's strategies
//   LaplacianApply          Delta0 = delta0* delta0 = sum_m h_m Pi_m
//
// The report-facing "divergence" is -delta0*, i.e. total flow leaving a node.

#ifndef GAMEHODGE_FLOW_H_
#define GAMEHODGE_FLOW_H_

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "gamehodge/game.h"

namespace gamehodge {

// Undirected comparable pair on its canonical orientation (tail < head).
struct Edge {
  ProfileIndex tail;
  ProfileIndex head;
  int player;
};

// 3-clique with a < b < c; all three profiles share p^{-m} for `player`.
struct Triangle {
  ProfileIndex a;
  ProfileIndex b;
  ProfileIndex c;
  int player;
};

class GameGraph {
 public:
  explicit GameGraph(StrategyShape shape);

  static std::shared_ptr<const GameGraph> Build(
      const std::vector<int>& counts,
      std::int64_t max_nodes = DefaultMaxNodes());
  static std::shared_ptr<const GameGraph> Build(const StrategyShape& shape);

  const StrategyShape& shape() const { return shape_; }
  std::int64_t num_nodes() const { return shape_.num_profiles(); }
  std::int64_t num_edges() const { return edge_offsets_.back(); }
  // sum_m C(h_m, 3) * |E^{-m}|, without enumerating.
  std::int64_t num_triangles() const;

  // Edge ids of player m occupy [PlayerEdgeBegin(m), PlayerEdgeEnd(m)).
  std::int64_t PlayerEdgeBegin(int player) const {
    return edge_offsets_[player];
  }
  std::int64_t PlayerEdgeEnd(int player) const {
    return edge_offsets_[player + 1];
  }

  // The deviating player if p and q are comparable.
  std::optional<int> ComparablePlayer(ProfileIndex p, ProfileIndex q) const;
  // Canonical edge id of the comparable pair {p, q}.
  std::optional<std::int64_t> EdgeId(ProfileIndex p, ProfileIndex q) const;
  // Unchecked: p and q must differ only in `player`'s coordinate.
  std::int64_t EdgeIdUnchecked(ProfileIndex p, ProfileIndex q,
                               int player) const;
  Edge EdgeAt(std::int64_t edge) const;

  // Enumerated on first use.
  const std::vector<Triangle>& Triangles() const;

 private:
  StrategyShape shape_;
  std::vector<std::int64_t> edge_offsets_;
  mutable std::once_flag triangles_once_;
  mutable std::vector<Triangle> triangles_;
};

using GraphPtr = std::shared_ptr<const GameGraph>;

// Element of C_1. Antisymmetric by construction.
class EdgeFlow {
 public:
  explicit EdgeFlow(GraphPtr graph);
  EdgeFlow(GraphPtr graph, std::vector<double> values);

  const GameGraph& graph() const { return *graph_; }
  const GraphPtr& graph_ptr() const { return graph_; }
  std::span<const double> values() const { return values_; }

  // X(p, q); zero when p and q are not comparable.
  double operator()(ProfileIndex p, ProfileIndex q) const;

  EdgeFlow operator+(const EdgeFlow& other) const;
  EdgeFlow operator-(const EdgeFlow& other) const;
  double MaxAbs() const;

 private:
  GraphPtr graph_;
  std::vector<double> values_;
};

// Element of C_2, one value per entry of graph.Triangles() in (a, b, c) order.
class TriangleFlow {
 public:
  TriangleFlow(GraphPtr graph, std::vector<double> values);

  std::span<const double> values() const { return values_; }
  // Alternating evaluation; zero off the triangle set.
  double operator()(ProfileIndex p, ProfileIndex q, ProfileIndex r) const;
  double MaxAbs() const;

 private:
  GraphPtr graph_;
  std::vector<double> values_;
};

// Inner products on C_0, C_1 (with the 1/2 over ordered pairs, i.e. one term
// per undirected edge) and C_2.
double InnerProduct(std::span<const double> a, std::span<const double> b);
double InnerProduct(const EdgeFlow& x, const EdgeFlow& y);
double InnerProduct(const TriangleFlow& x, const TriangleFlow& y);

EdgeFlow PairwiseComparison(const GraphPtr& graph, const Game& game);
EdgeFlow Gradient(const GraphPtr& graph, std::span<const double> phi);
NodeFunction DivergenceAdjoint(const EdgeFlow& flow);
TriangleFlow Curl(const EdgeFlow& flow);

EdgeFlow PlayerGradient(const GraphPtr& graph, int player,
                        std::span<const double> phi);
NodeFunction PlayerDivergenceAdjoint(const EdgeFlow& flow, int player);
// Lambda_m: zero the flow off player m's edges.
EdgeFlow RestrictToPlayer(const EdgeFlow& flow, int player);

NodeFunction ProjectPlayer(const StrategyShape& shape, int player,
                           std::span<const double> u);
NodeFunction LaplacianApply(const StrategyShape& shape,
                            std::span<const double> phi);
NodeFunction PlayerLaplacianApply(const StrategyShape& shape, int player,
                                  std::span<const double> phi);

}  // namespace gamehodge

#endif  // GAMEHODGE_FLOW_H_
