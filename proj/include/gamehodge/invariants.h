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

// Invariant suite run against a single game.

#ifndef GAMEHODGE_INVARIANTS_H_
#define GAMEHODGE_INVARIANTS_H_

#include <cstdint>
#include <string>
#include <vector>

#include "gamehodge/game.h"

namespace gamehodge {

struct InvariantCheck {
  std::string name;
  double violation = 0.0;
  double limit = 0.0;
  bool ok = true;
};

// Decomposition, operator and normalization identities on `game`. Random
// probes (node functions, flows, node subsets) are drawn from `seed`.
std::vector<InvariantCheck> VerifyGame(const Game& game,
                                       double tol = kDefaultTolerance,
                                       std::uint64_t seed = 1);

bool AllPassed(const std::vector<InvariantCheck>& checks);

}  // namespace gamehodge

#endif  // GAMEHODGE_INVARIANTS_H_
