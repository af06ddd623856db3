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

// Usage: cli_round_trip_check game.json decomposition.json
// Exits 0 when the decomposition components sum to the game within 1e-9.

#include <fstream>
#include <iostream>

#include "gamehodge/io.h"

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: " << argv[0] << " game.json decomposition.json\n";
    return 2;
  }
  const gamehodge::Game game = gamehodge::ReadGameFile(argv[1]);
  std::ifstream in(argv[2]);
  const gamehodge::Json doc = gamehodge::Json::parse(in);
  const gamehodge::Decomposition parts = gamehodge::DecompositionFromJson(doc);
  const double err = gamehodge::MaxAbsDifference(
      parts.potential + parts.harmonic + parts.nonstrategic, game);
  std::cout << "reconstruction error " << err << "\n";
  return err <= 1e-9 ? 0 : 1;
}
