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

#ifndef GAMEHODGE_ERRORS_H_
#define GAMEHODGE_ERRORS_H_

#include <stdexcept>
#include <string>

namespace gamehodge {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Out-of-range player, strategy or profile index.
class BoundsError : public Error {
 public:
  using Error::Error;
};

// Operands of incompatible shape, or a shape the operation does not support
// (e.g. a two-player routine called on a three-player game).
class ShapeError : public Error {
 public:
  using Error::Error;
};

// Joint strategy space exceeds the configured node cap.
class SizeError : public Error {
 public:
  using Error::Error;
};

// Input violates a documented precondition (unnormalized, non-harmonic, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Iterative solver failed to converge or a residual check failed.
class NumericError : public Error {
 public:
  NumericError(const std::string& what, double residual)
      : Error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

// Malformed serialized input.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace gamehodge

#endif  // GAMEHODGE_ERRORS_H_
