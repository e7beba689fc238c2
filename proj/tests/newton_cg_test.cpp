//
// Copyright 2026 The dpopt Authors
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
//

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dpopt/cholesky.hpp"
#include "dpopt/newton_cg.hpp"
#include "dpopt/objective.hpp"
#include "test_util.hpp"

using namespace dpopt;
using namespace dpopt::test;

namespace {

double model_value(const DenseMatrix& d, const DenseMatrix& g,
                   const DenseMatrix& x_inv) {
  return inner(d, g) + 0.5 * inner(d, hess_vec(g, x_inv, d));
}

}  // namespace

TEST_CASE("fully constrained scalar case returns zero") {
  const DenseMatrix x_inv{{1.0}};
  const DenseMatrix g{{-3.0}};
  const DirectionResult r = solve_direction(x_inv, g, 10);
  CHECK(r.D(0, 0) == 0.0);
  CHECK(r.cg_iterations == 0);
  CHECK(r.final_residual_sq == 0.0);
}

TEST_CASE("2x2 case has the closed-form projected minimizer") {
  // X = I, V = [[2,1],[1,2]]: minimize -2d + 4d^2 over D = [[0,d],[d,0]],
  // so d = 1/4.
  const GramMatrix v{DenseMatrix{{2.0, 1.0}, {1.0, 2.0}}, 0.0, ThetaScaling::kRaw, 0.0};
  const DenseMatrix x_inv = DenseMatrix::identity(2);
  const DenseMatrix g = eval_gradient(x_inv, v);

  const DirectionResult r = solve_direction(x_inv, g, 50);
  CHECK(max_abs_diff(r.D, DenseMatrix{{0.0, 0.25}, {0.25, 0.0}}) < 1e-10);
  CHECK(r.D(0, 0) == 0.0);
  CHECK(r.D(1, 1) == 0.0);
}

TEST_CASE("matches the dense constrained solve") {
  Rng rng(31);
  for (int t = 0; t < 20; ++t) {
    const int n = 2 + static_cast<int>(rng.next_below(3));  // n in {2,3,4}
    const DenseMatrix x = random_correlation(n, rng);
    const GramMatrix v{random_spd(n, rng, 0.2), 0.0, ThetaScaling::kRaw, 0.0};
    const DenseMatrix x_inv = chol_inverse(*cholesky(x));
    const DenseMatrix g = eval_gradient(x_inv, v);

    const DenseMatrix oracle = dense_constrained_direction(x_inv, g);
    const DirectionResult r = solve_direction(x_inv, g, n * n, 1e-24);
    CHECK(frobenius_norm(add_scaled(r.D, -1.0, oracle)) < 1e-6);
  }
}

TEST_CASE("n = 3 iterate agrees with the dense oracle at T = 50") {
  Rng rng(32);
  const DenseMatrix x = random_correlation(3, rng);
  const GramMatrix v{random_spd(3, rng, 0.2), 0.0, ThetaScaling::kRaw, 0.0};
  const DenseMatrix x_inv = chol_inverse(*cholesky(x));
  const DenseMatrix g = eval_gradient(x_inv, v);

  const DenseMatrix oracle = dense_constrained_direction(x_inv, g);
  const DirectionResult r = solve_direction(x_inv, g, 50, 1e-24);
  CHECK(frobenius_norm(add_scaled(r.D, -1.0, oracle)) < 1e-6);
}

TEST_CASE("projection, symmetry, descent and model decrease") {
  Rng rng(33);
  for (int t = 0; t < 25; ++t) {
    const int n = 2 + static_cast<int>(rng.next_below(7));
    const DenseMatrix x = random_correlation(n, rng);
    const GramMatrix v{random_spd(n, rng, 0.1), 0.0, ThetaScaling::kRaw, 0.0};
    const DenseMatrix x_inv = chol_inverse(*cholesky(x));
    const DenseMatrix g = eval_gradient(x_inv, v);

    const int iters = 1 + static_cast<int>(rng.next_below(6));
    const DirectionResult r = solve_direction(x_inv, g, iters);

    for (int i = 0; i < n; ++i) CHECK(r.D(i, i) == 0.0);
    CHECK(is_symmetric(r.D, 1e-10));
    CHECK(inner(g, r.D) < 0.0);                    // truncated CG still descends
    CHECK(model_value(r.D, g, x_inv) <= 0.0);
  }
}

TEST_CASE("exact minimizer satisfies the curvature descent inequality") {
  Rng rng(34);
  for (int t = 0; t < 10; ++t) {
    const int n = 2 + static_cast<int>(rng.next_below(3));
    const DenseMatrix x = random_correlation(n, rng);
    const GramMatrix v{random_spd(n, rng, 0.2), 0.0, ThetaScaling::kRaw, 0.0};
    const DenseMatrix x_inv = chol_inverse(*cholesky(x));
    const DenseMatrix g = eval_gradient(x_inv, v);

    const DirectionResult r = solve_direction(x_inv, g, n * n, 1e-24);
    const double quad = inner(r.D, hess_vec(g, x_inv, r.D));
    CHECK(inner(g, r.D) <= -quad + 1e-10 * quad);
  }
}

TEST_CASE("residual early exit reports the final residual") {
  const GramMatrix v{DenseMatrix{{2.0, 1.0}, {1.0, 2.0}}, 0.0, ThetaScaling::kRaw, 0.0};
  const DenseMatrix x_inv = DenseMatrix::identity(2);
  const DenseMatrix g = eval_gradient(x_inv, v);
  const DirectionResult r = solve_direction(x_inv, g, 50, 1e-10);
  CHECK(r.cg_iterations <= 2);  // the 2x2 subspace is one-dimensional
  CHECK(r.final_residual_sq < 1e-10);
}
