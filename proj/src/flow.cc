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

#include "gamehodge/flow.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "gamehodge/errors.h"

namespace gamehodge {
namespace {

// Below this many independent work items the OpenMP fork costs more than the
// loop itself.
constexpr std::int64_t kParallelGrain = 2048;

std::int64_t Choose2(std::int64_t h) { return h * (h - 1) / 2; }
std::int64_t Choose3(std::int64_t h) { return h * (h - 1) * (h - 2) / 6; }

// Position of (a, b), a < b, in the lexicographic list of pairs from h.
std::int64_t PairRank(std::int64_t a, std::int64_t b, std::int64_t h) {
  return a * (2 * h - a - 1) / 2 + (b - a - 1);
}

// Position of (a, b, c), a < b < c, in the lexicographic list of triples.
std::int64_t TripleRank(std::int64_t a, std::int64_t b, std::int64_t c,
                        std::int64_t h) {
  std::int64_t rank = 0;
  for (std::int64_t i = 0; i < a; ++i) rank += Choose2(h - 1 - i);
  for (std::int64_t j = a + 1; j < b; ++j) rank += h - 1 - j;
  return rank + (c - b - 1);
}

// Signed value X(p, q) for p, q differing only in `player`.
inline double FlowBetween(const GameGraph& graph, std::span<const double> x,
                          ProfileIndex p, ProfileIndex q, int player) {
  const double v = x[graph.EdgeIdUnchecked(p, q, player)];
  return p < q ? v : -v;
}

void CheckSameGraph(const EdgeFlow& a, const EdgeFlow& b) {
  if (!(a.graph().shape() == b.graph().shape())) {
    throw ShapeError("edge flows live on different game graphs");
  }
}

void CheckLength(const StrategyShape& shape, std::span<const double> f) {
  if (static_cast<std::int64_t>(f.size()) != shape.num_profiles()) {
    throw ShapeError("node function has length " + std::to_string(f.size()) +
                     ", expected " + std::to_string(shape.num_profiles()));
  }
}

}  // namespace

GameGraph::GameGraph(StrategyShape shape) : shape_(std::move(shape)) {
  edge_offsets_.assign(shape_.num_players() + 1, 0);
  for (int m = 0; m < shape_.num_players(); ++m) {
    edge_offsets_[m + 1] =
        edge_offsets_[m] +
        shape_.num_opponent_profiles(m) * Choose2(shape_.counts()[m]);
  }
}

std::shared_ptr<const GameGraph> GameGraph::Build(
    const std::vector<int>& counts, std::int64_t max_nodes) {
  return std::make_shared<const GameGraph>(StrategyShape(counts, max_nodes));
}

std::shared_ptr<const GameGraph> GameGraph::Build(const StrategyShape& shape) {
  return std::make_shared<const GameGraph>(shape);
}

std::int64_t GameGraph::num_triangles() const {
  std::int64_t total = 0;
  for (int m = 0; m < shape_.num_players(); ++m) {
    total += Choose3(shape_.counts()[m]) * shape_.num_opponent_profiles(m);
  }
  return total;
}

std::optional<int> GameGraph::ComparablePlayer(ProfileIndex p,
                                               ProfileIndex q) const {
  if (p < 0 || q < 0 || p >= num_nodes() || q >= num_nodes()) {
    throw BoundsError("profile index out of range");
  }
  int owner = -1;
  for (int m = 0; m < shape_.num_players(); ++m) {
    if (shape_.Coordinate(p, m) != shape_.Coordinate(q, m)) {
      if (owner >= 0) return std::nullopt;
      owner = m;
    }
  }
  if (owner < 0) return std::nullopt;
  return owner;
}

std::optional<std::int64_t> GameGraph::EdgeId(ProfileIndex p,
                                              ProfileIndex q) const {
  const auto owner = ComparablePlayer(p, q);
  if (!owner) return std::nullopt;
  return EdgeIdUnchecked(p, q, *owner);
}

std::int64_t GameGraph::EdgeIdUnchecked(ProfileIndex p, ProfileIndex q,
                                        int player) const {
  const std::int64_t h = shape_.counts()[player];
  std::int64_t a = shape_.Coordinate(p, player);
  std::int64_t b = shape_.Coordinate(q, player);
  if (a > b) std::swap(a, b);
  return edge_offsets_[player] +
         shape_.OpponentIndex(p, player) * Choose2(h) + PairRank(a, b, h);
}

Edge GameGraph::EdgeAt(std::int64_t edge) const {
  if (edge < 0 || edge >= num_edges()) {
    throw BoundsError("edge id " + std::to_string(edge) + " out of range");
  }
  int m = 0;
  while (edge >= edge_offsets_[m + 1]) ++m;
  const std::int64_t h = shape_.counts()[m];
  const std::int64_t local = edge - edge_offsets_[m];
  const std::int64_t opponent = local / Choose2(h);
  std::int64_t rank = local % Choose2(h);
  std::int64_t a = 0;
  while (rank >= h - 1 - a) {
    rank -= h - 1 - a;
    ++a;
  }
  const std::int64_t b = a + 1 + rank;
  return {shape_.FromOpponentIndex(opponent, m, static_cast<int>(a)),
          shape_.FromOpponentIndex(opponent, m, static_cast<int>(b)), m};
}

const std::vector<Triangle>& GameGraph::Triangles() const {
  std::call_once(triangles_once_, [this] {
    triangles_.reserve(num_triangles());
    for (int m = 0; m < shape_.num_players(); ++m) {
      const int h = shape_.counts()[m];
      if (h < 3) continue;
      for (std::int64_t o = 0; o < shape_.num_opponent_profiles(m); ++o) {
        for (int a = 0; a < h; ++a) {
          for (int b = a + 1; b < h; ++b) {
            for (int c = b + 1; c < h; ++c) {
              triangles_.push_back({shape_.FromOpponentIndex(o, m, a),
                                    shape_.FromOpponentIndex(o, m, b),
                                    shape_.FromOpponentIndex(o, m, c), m});
            }
          }
        }
      }
    }
  });
  return triangles_;
}

EdgeFlow::EdgeFlow(GraphPtr graph)
    : graph_(std::move(graph)), values_(graph_->num_edges(), 0.0) {}

EdgeFlow::EdgeFlow(GraphPtr graph, std::vector<double> values)
    : graph_(std::move(graph)), values_(std::move(values)) {
  if (static_cast<std::int64_t>(values_.size()) != graph_->num_edges()) {
    throw ShapeError("edge flow has " + std::to_string(values_.size()) +
                     " values, graph has " +
                     std::to_string(graph_->num_edges()) + " edges");
  }
}

double EdgeFlow::operator()(ProfileIndex p, ProfileIndex q) const {
  const auto owner = graph_->ComparablePlayer(p, q);
  if (!owner) return 0.0;
  return FlowBetween(*graph_, values_, p, q, *owner);
}

EdgeFlow EdgeFlow::operator+(const EdgeFlow& other) const {
  CheckSameGraph(*this, other);
  std::vector<double> out = values_;
  for (std::size_t e = 0; e < out.size(); ++e) out[e] += other.values_[e];
  return EdgeFlow(graph_, std::move(out));
}

EdgeFlow EdgeFlow::operator-(const EdgeFlow& other) const {
  CheckSameGraph(*this, other);
  std::vector<double> out = values_;
  for (std::size_t e = 0; e < out.size(); ++e) out[e] -= other.values_[e];
  return EdgeFlow(graph_, std::move(out));
}

double EdgeFlow::MaxAbs() const {
  double worst = 0.0;
  for (double v : values_) worst = std::max(worst, std::abs(v));
  return worst;
}

TriangleFlow::TriangleFlow(GraphPtr graph, std::vector<double> values)
    : graph_(std::move(graph)), values_(std::move(values)) {
  if (static_cast<std::int64_t>(values_.size()) != graph_->num_triangles()) {
    throw ShapeError("triangle flow size does not match the triangle set");
  }
}

double TriangleFlow::operator()(ProfileIndex p, ProfileIndex q,
                                ProfileIndex r) const {
  const GameGraph& g = *graph_;
  const auto pq = g.ComparablePlayer(p, q);
  const auto qr = g.ComparablePlayer(q, r);
  const auto pr = g.ComparablePlayer(p, r);
  if (!pq || !qr || !pr || *pq != *qr || *pq != *pr) return 0.0;
  const int m = *pq;
  // Sort to (a, b, c) tracking permutation parity.
  ProfileIndex v[3] = {p, q, r};
  int sign = 1;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2 - i; ++j) {
      if (v[j] > v[j + 1]) {
        std::swap(v[j], v[j + 1]);
        sign = -sign;
      }
    }
  }
  const StrategyShape& shape = g.shape();
  const std::int64_t h = shape.counts()[m];
  std::int64_t offset = 0;
  for (int k = 0; k < m; ++k) {
    offset += Choose3(shape.counts()[k]) * shape.num_opponent_profiles(k);
  }
  const std::int64_t index =
      offset + shape.OpponentIndex(v[0], m) * Choose3(h) +
      TripleRank(shape.Coordinate(v[0], m), shape.Coordinate(v[1], m),
                 shape.Coordinate(v[2], m), h);
  return sign * values_[index];
}

double TriangleFlow::MaxAbs() const {
  double worst = 0.0;
  for (double v : values_) worst = std::max(worst, std::abs(v));
  return worst;
}

double InnerProduct(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw ShapeError("inner product size mismatch");
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

double InnerProduct(const EdgeFlow& x, const EdgeFlow& y) {
  CheckSameGraph(x, y);
  // (1/2) sum over ordered comparable pairs == sum over undirected edges.
  return InnerProduct(x.values(), y.values());
}

double InnerProduct(const TriangleFlow& x, const TriangleFlow& y) {
  return InnerProduct(x.values(), y.values());
}

namespace {

// Fills values[e] = f(head) - f(tail) over the edges of one player.
void PlayerDifferences(const GameGraph& graph, int m,
                       std::span<const double> f, std::vector<double>& out) {
  const StrategyShape& shape = graph.shape();
  const int h = shape.counts()[m];
  const std::int64_t stride = shape.stride(m);
  const std::int64_t blocks = shape.num_opponent_profiles(m);
  const std::int64_t pairs = Choose2(h);
  const std::int64_t begin = graph.PlayerEdgeBegin(m);
#pragma omp parallel for schedule(static) if (blocks * pairs > kParallelGrain)
  for (std::int64_t o = 0; o < blocks; ++o) {
    const ProfileIndex base = shape.FromOpponentIndex(o, m, 0);
    std::int64_t e = begin + o * pairs;
    for (int a = 0; a < h; ++a) {
      const double fa = f[base + a * stride];
      for (int b = a + 1; b < h; ++b) out[e++] = f[base + b * stride] - fa;
    }
  }
}

// out[p] += -sum_{q m-comparable to p} X(p, q).
void AccumulatePlayerDivergence(const GameGraph& graph, int m,
                                std::span<const double> x,
                                std::vector<double>& out) {
  const StrategyShape& shape = graph.shape();
  const int h = shape.counts()[m];
  const std::int64_t stride = shape.stride(m);
  const std::int64_t blocks = shape.num_opponent_profiles(m);
  const std::int64_t pairs = Choose2(h);
  const std::int64_t begin = graph.PlayerEdgeBegin(m);
#pragma omp parallel for schedule(static) if (blocks * pairs > kParallelGrain)
  for (std::int64_t o = 0; o < blocks; ++o) {
    const ProfileIndex base = shape.FromOpponentIndex(o, m, 0);
    std::int64_t e = begin + o * pairs;
    for (int a = 0; a < h; ++a) {
      for (int b = a + 1; b < h; ++b) {
        // X(tail, head) = x[e]; tail leaks x[e], head receives it.
        out[base + a * stride] -= x[e];
        out[base + b * stride] += x[e];
        ++e;
      }
    }
  }
}

}  // namespace

EdgeFlow PairwiseComparison(const GraphPtr& graph, const Game& game) {
  if (!(graph->shape() == game.shape())) {
    throw ShapeError("game and graph shapes differ");
  }
  std::vector<double> values(graph->num_edges());
  for (int m = 0; m < game.num_players(); ++m) {
    PlayerDifferences(*graph, m, game.utilities(m), values);
  }
  return EdgeFlow(graph, std::move(values));
}

EdgeFlow Gradient(const GraphPtr& graph, std::span<const double> phi) {
  CheckLength(graph->shape(), phi);
  std::vector<double> values(graph->num_edges());
  for (int m = 0; m < graph->shape().num_players(); ++m) {
    PlayerDifferences(*graph, m, phi, values);
  }
  return EdgeFlow(graph, std::move(values));
}

NodeFunction DivergenceAdjoint(const EdgeFlow& flow) {
  const GameGraph& graph = flow.graph();
  NodeFunction out(graph.num_nodes(), 0.0);
  for (int m = 0; m < graph.shape().num_players(); ++m) {
    AccumulatePlayerDivergence(graph, m, flow.values(), out);
  }
  return out;
}

TriangleFlow Curl(const EdgeFlow& flow) {
  const GameGraph& graph = flow.graph();
  const auto& triangles = graph.Triangles();
  const auto x = flow.values();
  const std::int64_t n = static_cast<std::int64_t>(triangles.size());
  std::vector<double> values(n);
#pragma omp parallel for schedule(static) if (n > kParallelGrain)
  for (std::int64_t t = 0; t < n; ++t) {
    const Triangle& tri = triangles[t];
    values[t] = FlowBetween(graph, x, tri.a, tri.b, tri.player) +
                FlowBetween(graph, x, tri.b, tri.c, tri.player) +
                FlowBetween(graph, x, tri.c, tri.a, tri.player);
  }
  return TriangleFlow(flow.graph_ptr(), std::move(values));
}

EdgeFlow PlayerGradient(const GraphPtr& graph, int player,
                        std::span<const double> phi) {
  graph->shape().CheckPlayer(player);
  CheckLength(graph->shape(), phi);
  std::vector<double> values(graph->num_edges(), 0.0);
  PlayerDifferences(*graph, player, phi, values);
  return EdgeFlow(graph, std::move(values));
}

NodeFunction PlayerDivergenceAdjoint(const EdgeFlow& flow, int player) {
  const GameGraph& graph = flow.graph();
  graph.shape().CheckPlayer(player);
  NodeFunction out(graph.num_nodes(), 0.0);
  AccumulatePlayerDivergence(graph, player, flow.values(), out);
  return out;
}

EdgeFlow RestrictToPlayer(const EdgeFlow& flow, int player) {
  const GameGraph& graph = flow.graph();
  graph.shape().CheckPlayer(player);
  std::vector<double> values(graph.num_edges(), 0.0);
  const auto x = flow.values();
  for (std::int64_t e = graph.PlayerEdgeBegin(player);
       e < graph.PlayerEdgeEnd(player); ++e) {
    values[e] = x[e];
  }
  return EdgeFlow(flow.graph_ptr(), std::move(values));
}

NodeFunction ProjectPlayer(const StrategyShape& shape, int player,
                           std::span<const double> u) {
  shape.CheckPlayer(player);
  CheckLength(shape, u);
  const int h = shape.counts()[player];
  const std::int64_t stride = shape.stride(player);
  const std::int64_t blocks = shape.num_opponent_profiles(player);
  NodeFunction out(u.size());
#pragma omp parallel for schedule(static) if (blocks * h > kParallelGrain)
  for (std::int64_t o = 0; o < blocks; ++o) {
    const ProfileIndex base = shape.FromOpponentIndex(o, player, 0);
    double sum = 0.0;
    for (int k = 0; k < h; ++k) sum += u[base + k * stride];
    const double mean = sum / h;
    for (int k = 0; k < h; ++k) {
      out[base + k * stride] = u[base + k * stride] - mean;
    }
  }
  return out;
}

namespace {

// out[p] += sum_{q m-comparable to p} (phi(p) - phi(q)).
void AccumulatePlayerLaplacian(const StrategyShape& shape, int m,
                               std::span<const double> phi,
                               std::vector<double>& out) {
  const int h = shape.counts()[m];
  const std::int64_t stride = shape.stride(m);
  const std::int64_t blocks = shape.num_opponent_profiles(m);
#pragma omp parallel for schedule(static) if (blocks * h > kParallelGrain)
  for (std::int64_t o = 0; o < blocks; ++o) {
    const ProfileIndex base = shape.FromOpponentIndex(o, m, 0);
    double block_sum = 0.0;
    for (int k = 0; k < h; ++k) block_sum += phi[base + k * stride];
    for (int k = 0; k < h; ++k) {
      const ProfileIndex p = base + k * stride;
      // degree h - 1 times phi(p), minus the sum over the other h - 1 nodes.
      out[p] += h * phi[p] - block_sum;
    }
  }
}

}  // namespace

NodeFunction LaplacianApply(const StrategyShape& shape,
                            std::span<const double> phi) {
  CheckLength(shape, phi);
  NodeFunction out(phi.size(), 0.0);
  for (int m = 0; m < shape.num_players(); ++m) {
    AccumulatePlayerLaplacian(shape, m, phi, out);
  }
  return out;
}

NodeFunction PlayerLaplacianApply(const StrategyShape& shape, int player,
                                  std::span<const double> phi) {
  shape.CheckPlayer(player);
  CheckLength(shape, phi);
  NodeFunction out(phi.size(), 0.0);
  AccumulatePlayerLaplacian(shape, player, phi, out);
  return out;
}

}  // namespace gamehodge
