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

// Serial reference kernels written from the definitions: explicit profile
// decoding and per-edge scatter. Used to cross-check the parallel kernels in
// tests and benchmarks.

#ifndef GAMEHODGE_REFERENCE_H_
#define GAMEHODGE_REFERENCE_H_

#include <span>
#include <vector>

#include "gamehodge/equilibria.h"
#include "gamehodge/flow.h"
#include "gamehodge/game.h"

namespace gamehodge::reference {

// Edge values in edge-id order.
std::vector<double> PairwiseComparison(const GameGraph& graph,
                                       const Game& game);
std::vector<double> Gradient(const GameGraph& graph,
                             std::span<const double> phi);
NodeFunction DivergenceAdjoint(const GameGraph& graph,
                               std::span<const double> flow);
NodeFunction LaplacianApply(const GameGraph& graph,
                            std::span<const double> phi);
NodeFunction ProjectPlayer(const StrategyShape& shape, int player,
                           std::span<const double> u);
ProfileSet PureNash(const Game& game);
ProfileSet ParetoOptimal(const Game& game);

}  // namespace gamehodge::reference

#endif  // GAMEHODGE_REFERENCE_H_
