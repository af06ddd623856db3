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

// Seeded random games for property tests, rank computations and benchmarks.

#ifndef GAMEHODGE_RANDOM_H_
#define GAMEHODGE_RANDOM_H_

#include <random>
#include <vector>

#include "gamehodge/game.h"

namespace gamehodge {

using Rng = std::mt19937_64;

// Payoffs uniform in [lo, hi].
Game RandomGame(const std::vector<int>& counts, Rng& rng, double lo = -1.0,
                double hi = 1.0);

NodeFunction RandomNodeFunction(std::int64_t size, Rng& rng);

// Harmonic game with coordinates uniform in [-1, 1]. Two-player shapes use the
// explicit basis; other shapes take the harmonic part of a random game.
Game RandomHarmonicGame(const std::vector<int>& counts, Rng& rng);

// Potential part plus nonstrategic part of a random game.
Game RandomPotentialGame(const std::vector<int>& counts, Rng& rng);

}  // namespace gamehodge

#endif  // GAMEHODGE_RANDOM_H_
