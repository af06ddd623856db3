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

// JSON and DOT serialization.
//
// Game format:
//   {"players": [{"name": str, "strategies": [str, ...]}, ...],
//    "utilities": [[float, ...], ...]}
// with utilities[m] in profile-index order (last player fastest).

#ifndef GAMEHODGE_IO_H_
#define GAMEHODGE_IO_H_

#include <optional>
#include <string>

#include "gamehodge/decompose.h"
#include "gamehodge/equilibria.h"
#include "gamehodge/flow.h"
#include "gamehodge/game.h"
#include "gamehodge/subspaces.h"
#include "json.hpp"

namespace gamehodge {

using Json = nlohmann::ordered_json;

inline constexpr int kOutputDigits = 12;

// Rounds to kOutputDigits significant digits and maps |v| < 1e-12 * scale to
// zero.
double OutputValue(double v, double scale = 1.0);

// All parsers throw ParseError.
Game GameFromJson(const Json& doc);
Game ParseGame(const std::string& text);
Game ReadGameFile(const std::string& path);

Json GameToJson(const Game& game);
Json DecompositionToJson(const Decomposition& parts);
// Inverse of DecompositionToJson for the three component games.
Decomposition DecompositionFromJson(const Json& doc);

struct EquilibriumReport {
  ProfileSet pure_nash;
  double epsilon = 0.0;
  ProfileSet epsilon_equilibria;
  ProfileSet pareto_optimal;
  bool uniform_mixed_is_ne = false;
  std::optional<int> correlated_dim;
};

Json EquilibriumReportToJson(const Game& game, const EquilibriumReport& report);

// Profiles as lists of strategy indices.
Json ProfilesToJson(const StrategyShape& shape, const ProfileSet& profiles);

Json BasisToJson(const SubspaceBasis& basis);

// "(O,F)" from strategy labels, "(0,1)" when unnamed.
std::string ProfileName(const Game& game, ProfileIndex p);

// One arrow per nonzero edge, pointing in the direction of positive flow and
// labeled with the magnitude.
std::string FlowToDot(const Game& game, const EdgeFlow& flow);

void WriteText(const std::string& path, const std::string& text);

}  // namespace gamehodge

#endif  // GAMEHODGE_IO_H_
