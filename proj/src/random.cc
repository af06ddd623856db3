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

#include "gamehodge/random.h"

#include "gamehodge/decompose.h"
#include "gamehodge/subspaces.h"

namespace gamehodge {

Game RandomGame(const std::vector<int>& counts, Rng& rng, double lo,
                double hi) {
  StrategyShape shape(counts);
  std::uniform_real_distribution<double> dist(lo, hi);
  std::vector<NodeFunction> u(shape.num_players(),
                              NodeFunction(shape.num_profiles()));
  for (NodeFunction& f : u) {
    for (double& v : f) v = dist(rng);
  }
  return Game(shape, std::move(u));
}

NodeFunction RandomNodeFunction(std::int64_t size, Rng& rng) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  NodeFunction f(size);
  for (double& v : f) v = dist(rng);
  return f;
}

Game RandomHarmonicGame(const std::vector<int>& counts, Rng& rng) {
  if (counts.size() == 2 && counts[0] >= 2 && counts[1] >= 2) {
    const SubspaceBasis basis = HarmonicBasis2p(counts[0], counts[1]);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    Game out = Game::Zero(basis.shape);
    for (const Game& g : basis.games) out = out + dist(rng) * g;
    return out;
  }
  return Decompose(RandomGame(counts, rng)).harmonic;
}

Game RandomPotentialGame(const std::vector<int>& counts, Rng& rng) {
  return ClosestPotential(RandomGame(counts, rng));
}

}  // namespace gamehodge
