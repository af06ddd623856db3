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

#ifndef GAMEHODGE_SOLVER_H_
#define GAMEHODGE_SOLVER_H_

#include <cstdint>
#include <span>

#include "gamehodge/game.h"

namespace gamehodge {

inline constexpr std::int64_t kDenseFallbackMaxNodes = 512;

struct PinvSolveOptions {
  double tol = 1e-10;
  // 0 selects 10 * |E|.
  std::int64_t max_iterations = 0;
  // Retry with a dense eigendecomposition when CG stalls on a small graph.
  bool dense_fallback = true;
};

struct PinvSolveResult {
  NodeFunction phi;
  std::int64_t iterations = 0;
  // ||Delta0 phi - b||_2 of the returned phi.
  double residual = 0.0;
  bool used_dense = false;
};

// Mean-zero phi with Delta0 phi = b, i.e. the pseudoinverse solution.
// Conjugate gradient on the constants' orthogonal complement. Throws
// PreconditionError if b is not orthogonal to constants and NumericError if
// the residual exceeds tol * max(1, ||b||).
PinvSolveResult LaplacianPinvSolve(const StrategyShape& shape,
                                   std::span<const double> b,
                                   const PinvSolveOptions& options = {});

// Same contract through a dense symmetric eigendecomposition of Delta0.
// Limited to kDenseFallbackMaxNodes nodes (SizeError above).
PinvSolveResult DenseLaplacianPinvSolve(const StrategyShape& shape,
                                        std::span<const double> b,
                                        double tol = 1e-10);

}  // namespace gamehodge

#endif  // GAMEHODGE_SOLVER_H_
