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

#include "gamehodge/solver.h"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <string>

#include "gamehodge/errors.h"
#include "gamehodge/flow.h"

namespace gamehodge {
namespace {

double Norm(std::span<const double> v) {
  double sum = 0.0;
  for (double x : v) sum += x * x;
  return std::sqrt(sum);
}

double Dot(std::span<const double> a, std::span<const double> b) {
  double sum = 0.0;
#pragma omp parallel for reduction(+ : sum) schedule(static) \
    if (a.size() > 65536)
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

void RemoveMean(std::vector<double>& v) {
  if (v.empty()) return;
  const double mean =
      std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
  for (double& x : v) x -= mean;
}

double Residual(const StrategyShape& shape, std::span<const double> phi,
                std::span<const double> b) {
  const NodeFunction lap = LaplacianApply(shape, phi);
  double sum = 0.0;
  for (std::size_t i = 0; i < lap.size(); ++i) {
    const double d = lap[i] - b[i];
    sum += d * d;
  }
  return std::sqrt(sum);
}

void CheckRightHandSide(const StrategyShape& shape, std::span<const double> b,
                        double tol) {
  if (static_cast<std::int64_t>(b.size()) != shape.num_profiles()) {
    throw ShapeError("right-hand side length does not match the game graph");
  }
  // |<b, 1>| / (||b|| ||1||) is the cosine between b and the constants. The
  // floor on ||b|| keeps roundoff-sized right-hand sides from tripping it.
  const double total = std::accumulate(b.begin(), b.end(), 0.0);
  const double scale =
      std::max(1.0, Norm(b)) * std::sqrt(static_cast<double>(b.size()));
  if (std::abs(total) > tol * scale) {
    std::ostringstream msg;
    msg << "right-hand side is not orthogonal to constants (sum = " << total
        << ")";
    throw PreconditionError(msg.str());
  }
}

}  // namespace

PinvSolveResult LaplacianPinvSolve(const StrategyShape& shape,
                                   std::span<const double> b,
                                   const PinvSolveOptions& options) {
  CheckRightHandSide(shape, b, options.tol);
  const std::int64_t n = shape.num_profiles();
  const double b_norm = Norm(b);
  const double target = options.tol * std::max(1.0, b_norm);
  const std::int64_t max_iterations =
      options.max_iterations > 0 ? options.max_iterations : 10 * n;

  PinvSolveResult result;
  result.phi.assign(n, 0.0);
  std::vector<double> r(b.begin(), b.end());
  RemoveMean(r);
  std::vector<double> p = r;
  double rr = Dot(r, r);

  // Stop a little inside the target so the recomputed residual passes.
  const double stop = 0.25 * target;
  std::int64_t it = 0;
  while (std::sqrt(rr) > stop && it < max_iterations) {
    const NodeFunction ap = LaplacianApply(shape, p);
    const double pap = Dot(p, ap);
    if (!(pap > 0.0)) break;
    const double alpha = rr / pap;
    for (std::int64_t i = 0; i < n; ++i) {
      result.phi[i] += alpha * p[i];
      r[i] -= alpha * ap[i];
    }
    RemoveMean(r);
    const double rr_next = Dot(r, r);
    const double beta = rr_next / rr;
    for (std::int64_t i = 0; i < n; ++i) p[i] = r[i] + beta * p[i];
    rr = rr_next;
    ++it;
  }
  RemoveMean(result.phi);
  result.iterations = it;
  result.residual = Residual(shape, result.phi, b);
  if (result.residual <= target) return result;

  if (options.dense_fallback && n <= kDenseFallbackMaxNodes) {
    return DenseLaplacianPinvSolve(shape, b, options.tol);
  }
  std::ostringstream msg;
  msg << "Laplacian solve did not converge after " << it
      << " iterations (residual " << result.residual << ", target " << target
      << ")";
  throw NumericError(msg.str(), result.residual);
}

PinvSolveResult DenseLaplacianPinvSolve(const StrategyShape& shape,
                                        std::span<const double> b,
                                        double tol) {
  CheckRightHandSide(shape, b, tol);
  const std::int64_t n = shape.num_profiles();
  if (n > kDenseFallbackMaxNodes) {
    throw SizeError("dense Laplacian solve limited to " +
                    std::to_string(kDenseFallbackMaxNodes) + " nodes");
  }
  // Assemble Delta0 = diag(degree) - adjacency from the comparability rule.
  Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(n, n);
  for (ProfileIndex p = 0; p < n; ++p) {
    for (int m = 0; m < shape.num_players(); ++m) {
      for (int k = 0; k < shape.counts()[m]; ++k) {
        const ProfileIndex q = shape.Deviate(p, m, k);
        if (q == p) continue;
        lap(p, q) = -1.0;
        lap(p, p) += 1.0;
      }
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(lap);
  const Eigen::VectorXd& lambda = eig.eigenvalues();
  const Eigen::MatrixXd& v = eig.eigenvectors();
  const double cutoff = 1e-9 * std::max(1.0, lambda.cwiseAbs().maxCoeff());
  const Eigen::Map<const Eigen::VectorXd> rhs(b.data(), n);
  Eigen::VectorXd phi = Eigen::VectorXd::Zero(n);
  for (std::int64_t k = 0; k < n; ++k) {
    if (lambda(k) > cutoff) {
      phi += (v.col(k).dot(rhs) / lambda(k)) * v.col(k);
    }
  }
  PinvSolveResult result;
  result.phi.assign(phi.data(), phi.data() + n);
  RemoveMean(result.phi);
  result.used_dense = true;
  result.residual = Residual(shape, result.phi, b);
  const double target = tol * std::max(1.0, Norm(b));
  if (result.residual > target) {
    std::ostringstream msg;
    msg << "dense Laplacian solve residual " << result.residual
        << " exceeds " << target;
    throw NumericError(msg.str(), result.residual);
  }
  return result;
}

}  // namespace gamehodge
