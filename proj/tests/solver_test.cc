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
#include <numeric>

#include "doctest.h"
#include "gamehodge/errors.h"
#include "gamehodge/flow.h"
#include "gamehodge/random.h"
#include "oracles.h"

namespace gamehodge {
namespace {

NodeFunction MeanZero(NodeFunction v) {
  const double mean = std::accumulate(v.begin(), v.end(), 0.0) / v.size();
  for (double& x : v) x -= mean;
  return v;
}

TEST_CASE("CG pseudoinverse matches the dense Moore-Penrose solution") {
  Rng rng(31);
  for (const std::vector<int>& h :
       {std::vector<int>{2, 2}, {3, 3}, {2, 3, 2}, {4, 3}, {2, 2, 2, 2}}) {
    const StrategyShape shape(h);
    const NodeFunction b = MeanZero(RandomNodeFunction(shape.num_profiles(), rng));
    const PinvSolveResult cg = LaplacianPinvSolve(shape, b);
    CHECK_FALSE(cg.used_dense);
    const Eigen::MatrixXd pinv =
        oracle::DenseLaplacian(h).completeOrthogonalDecomposition().pseudoInverse();
    const Eigen::VectorXd expected = pinv * oracle::ToVector(b);
    CHECK(oracle::MaxAbsDiff(cg.phi, oracle::ToNode(expected)) < 1e-9);
    CHECK(cg.residual < 1e-9);
    CHECK(std::abs(std::accumulate(cg.phi.begin(), cg.phi.end(), 0.0)) < 1e-12);

    const PinvSolveResult dense = DenseLaplacianPinvSolve(shape, b);
    CHECK(dense.used_dense);
    CHECK(oracle::MaxAbsDiff(dense.phi, oracle::ToNode(expected)) < 1e-9);
  }
}

TEST_CASE("solve recovers a mean-zero potential from its laplacian") {
  Rng rng(37);
  const StrategyShape shape({5, 4, 3});
  const NodeFunction phi = MeanZero(RandomNodeFunction(shape.num_profiles(), rng));
  const PinvSolveResult r = LaplacianPinvSolve(shape, LaplacianApply(shape, phi));
  CHECK(oracle::MaxAbsDiff(r.phi, phi) < 1e-9);
  CHECK(r.iterations > 0);
  CHECK(r.iterations <= 10 * shape.num_profiles());
}

TEST_CASE("single-node graph solves to zero") {
  const StrategyShape shape({1, 1});
  const PinvSolveResult r = LaplacianPinvSolve(shape, NodeFunction{0.0});
  CHECK(r.phi == NodeFunction{0.0});
}

TEST_CASE("right-hand side must be orthogonal to constants") {
  const StrategyShape shape({2, 2});
  CHECK_THROWS_AS(LaplacianPinvSolve(shape, NodeFunction{1, 1, 1, 1}),
                  PreconditionError);
  CHECK_THROWS_AS(LaplacianPinvSolve(shape, NodeFunction{1, -1}), ShapeError);
}

TEST_CASE("iteration cap falls back to the dense solver on small graphs") {
  Rng rng(41);
  const StrategyShape shape({3, 3, 3});
  const NodeFunction b = MeanZero(RandomNodeFunction(shape.num_profiles(), rng));
  PinvSolveOptions options;
  options.max_iterations = 1;
  const PinvSolveResult r = LaplacianPinvSolve(shape, b, options);
  CHECK(r.used_dense);
  CHECK(r.residual < 1e-9);
  options.dense_fallback = false;
  CHECK_THROWS_AS(LaplacianPinvSolve(shape, b, options), NumericError);
}

TEST_CASE("dense solve refuses large graphs") {
  const StrategyShape shape({30, 30});
  CHECK_THROWS_AS(DenseLaplacianPinvSolve(shape, NodeFunction(900, 0.0)),
                  SizeError);
}

}  // namespace
}  // namespace gamehodge
