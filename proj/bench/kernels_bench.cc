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

// Parallel kernels against the serial reference implementations.

#include <benchmark/benchmark.h>

#include <vector>

#include "gamehodge/decompose.h"
#include "gamehodge/equilibria.h"
#include "gamehodge/flow.h"
#include "gamehodge/random.h"
#include "gamehodge/reference.h"

namespace gamehodge {
namespace {

std::vector<int> Shape(int h) { return {h, h, h, h}; }

void BM_PairwiseComparison(benchmark::State& state) {
  Rng rng(1);
  const GraphPtr graph = GameGraph::Build(Shape(state.range(0)));
  const Game g = RandomGame(graph->shape().counts(), rng);
  for (auto _ : state) benchmark::DoNotOptimize(PairwiseComparison(graph, g));
  state.SetItemsProcessed(state.iterations() * graph->num_edges());
}

void BM_PairwiseComparisonSerial(benchmark::State& state) {
  Rng rng(1);
  const GraphPtr graph = GameGraph::Build(Shape(state.range(0)));
  const Game g = RandomGame(graph->shape().counts(), rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(reference::PairwiseComparison(*graph, g));
  }
  state.SetItemsProcessed(state.iterations() * graph->num_edges());
}

void BM_Laplacian(benchmark::State& state) {
  Rng rng(2);
  const StrategyShape shape(Shape(state.range(0)));
  const NodeFunction phi = RandomNodeFunction(shape.num_profiles(), rng);
  for (auto _ : state) benchmark::DoNotOptimize(LaplacianApply(shape, phi));
  state.SetItemsProcessed(state.iterations() * shape.num_profiles());
}

void BM_LaplacianSerial(benchmark::State& state) {
  Rng rng(2);
  const GraphPtr graph = GameGraph::Build(Shape(state.range(0)));
  const NodeFunction phi = RandomNodeFunction(graph->num_nodes(), rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(reference::LaplacianApply(*graph, phi));
  }
  state.SetItemsProcessed(state.iterations() * graph->num_nodes());
}

void BM_Divergence(benchmark::State& state) {
  Rng rng(3);
  const GraphPtr graph = GameGraph::Build(Shape(state.range(0)));
  const EdgeFlow x =
      PairwiseComparison(graph, RandomGame(graph->shape().counts(), rng));
  for (auto _ : state) benchmark::DoNotOptimize(DivergenceAdjoint(x));
}

void BM_DivergenceSerial(benchmark::State& state) {
  Rng rng(3);
  const GraphPtr graph = GameGraph::Build(Shape(state.range(0)));
  const EdgeFlow x =
      PairwiseComparison(graph, RandomGame(graph->shape().counts(), rng));
  for (auto _ : state) {
    benchmark::DoNotOptimize(reference::DivergenceAdjoint(*graph, x.values()));
  }
}

void BM_PureNash(benchmark::State& state) {
  Rng rng(4);
  const Game g = RandomGame(Shape(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(PureNash(g));
}

void BM_PureNashSerial(benchmark::State& state) {
  Rng rng(4);
  const Game g = RandomGame(Shape(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(reference::PureNash(g));
}

void BM_Decompose(benchmark::State& state) {
  Rng rng(5);
  const Game g = RandomGame(Shape(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(Decompose(g));
}

BENCHMARK(BM_PairwiseComparison)->Arg(8)->Arg(16);
BENCHMARK(BM_PairwiseComparisonSerial)->Arg(8)->Arg(16);
BENCHMARK(BM_Laplacian)->Arg(8)->Arg(16);
BENCHMARK(BM_LaplacianSerial)->Arg(8)->Arg(16);
BENCHMARK(BM_Divergence)->Arg(8)->Arg(16);
BENCHMARK(BM_DivergenceSerial)->Arg(8)->Arg(16);
BENCHMARK(BM_PureNash)->Arg(8)->Arg(16);
BENCHMARK(BM_PureNashSerial)->Arg(8)->Arg(16);
BENCHMARK(BM_Decompose)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace gamehodge

BENCHMARK_MAIN();
