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

// Reference games with known payoffs and components.

#ifndef GAMEHODGE_TESTS_FIXTURES_H_
#define GAMEHODGE_TESTS_FIXTURES_H_

#include <vector>

#include "gamehodge/game.h"

namespace gamehodge::fixtures {

inline Game BattleOfSexes() {
  return Game({2, 2}, {{3, 0, 0, 2}, {2, 0, 0, 3}},
              {{"row", "column"}, {{"O", "F"}, {"O", "F"}}});
}

inline Game ModifiedBattleOfSexes() {
  return Game({2, 2}, {{4, 0, 1, 2}, {2, 0, 0, 3}},
              {{"row", "column"}, {{"O", "F"}, {"O", "F"}}});
}

inline Game MatchingPennies() {
  return Game({2, 2}, {{1, -1, -1, 1}, {-1, 1, 1, -1}});
}

// Row payoffs [[0, -3x, 3y], [3x, 0, -3z], [-3y, 3z, 0]], column = -row.
inline Game GeneralizedRps(double x, double y, double z) {
  const std::vector<double> a = {0,     -3 * x, 3 * y, 3 * x, 0,
                                 -3 * z, -3 * y, 3 * z, 0};
  std::vector<double> b(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) b[i] = -a[i];
  return Game({3, 3}, {a, b});
}

// Known nonstrategic component: row player gets (x-y, z-x, y-z) by
// column, column player gets the same pattern by row.
inline Game RpsNonstrategic(double x, double y, double z) {
  const double v[3] = {x - y, z - x, y - z};
  std::vector<double> a(9), b(9);
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      a[r * 3 + c] = v[c];
      b[r * 3 + c] = v[r];
    }
  }
  return Game({3, 3}, {a, b});
}

// Known potential component: row player gets (y-x, x-z, z-y) by row,
// column player gets the same pattern by column.
inline Game RpsPotential(double x, double y, double z) {
  const double v[3] = {y - x, x - z, z - y};
  std::vector<double> a(9), b(9);
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      a[r * 3 + c] = v[r];
      b[r * 3 + c] = v[c];
    }
  }
  return Game({3, 3}, {a, b});
}

// Known harmonic component: RPS pattern scaled by x + y + z.
inline Game RpsHarmonic(double x, double y, double z) {
  const double s = x + y + z;
  const std::vector<double> a = {0, -s, s, s, 0, -s, -s, s, 0};
  std::vector<double> b(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) b[i] = -a[i];
  return Game({3, 3}, {a, b});
}

// Players (s, d1, d2), two roads each. s loses 2 per driver sharing its road;
// d1 loses 1 when d2 shares its road; d2 gets the negative of d1.
inline Game RoadSharing() {
  std::vector<double> us(8), ud1(8), ud2(8);
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      for (int c = 0; c < 2; ++c) {
        const int p = a * 4 + b * 2 + c;
        us[p] = -2.0 * ((b == a) + (c == a));
        ud1[p] = -1.0 * (b == c);
        ud2[p] = 1.0 * (b == c);
      }
    }
  }
  return Game({2, 2, 2}, {us, ud1, ud2});
}

// Player i gets -1 when matching player i+1 (cyclically) and 1 otherwise.
inline Game ThreePlayerCyclic() {
  std::vector<NodeFunction> u(3, NodeFunction(8));
  for (int p = 0; p < 8; ++p) {
    const int s[3] = {(p >> 2) & 1, (p >> 1) & 1, p & 1};
    for (int i = 0; i < 3; ++i) u[i][p] = s[i] == s[(i + 1) % 3] ? -1.0 : 1.0;
  }
  return Game({2, 2, 2}, u);
}

// Zero-sum game with exact potential (2, 1, 1, 0).
inline Game ZeroSumPotential() {
  return Game({2, 2}, {{0, 1, -1, 0}, {0, -1, 1, 0}});
}

}  // namespace gamehodge::fixtures

#endif  // GAMEHODGE_TESTS_FIXTURES_H_
