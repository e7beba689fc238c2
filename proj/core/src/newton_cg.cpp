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

#include "dpopt/newton_cg.hpp"

namespace dpopt {

namespace {

void zero_diagonal(DenseMatrix& m) {
  for (int i = 0; i < m.rows(); ++i) m(i, i) = 0.0;
}

// Hessian action for the CG iterates. G, X^{-1} and P are all symmetric
// here, so -G P X^{-1} - X^{-1} P G = -(M + M^T) with M = X^{-1} (P G):
// half the work of the general hess_vec, and the result is symmetric by
// construction, which keeps every CG iterate exactly symmetric.
DenseMatrix apply_hessian_sym(const DenseMatrix& g, const DenseMatrix& x_inv,
                              const DenseMatrix& p) {
  const DenseMatrix m = matmul(x_inv, matmul(p, g));
  const int n = m.rows();
  DenseMatrix out(n, n);
  for (int i = 0; i < n; ++i) {
    out(i, i) = -2.0 * m(i, i);
    for (int j = i + 1; j < n; ++j) {
      const double v = -(m(i, j) + m(j, i));
      out(i, j) = v;
      out(j, i) = v;
    }
  }
  return out;
}

}  // namespace

DirectionResult solve_direction(const DenseMatrix& x_inv, const DenseMatrix& g,
                                int max_iterations, double residual_tol) {
  DPOPT_CHECK(x_inv.square() && g.square() && x_inv.rows() == g.rows());
  DPOPT_CHECK(is_symmetric(g, 1e-10) && is_symmetric(x_inv, 1e-10));
  DPOPT_CHECK(max_iterations >= 1);
  const int n = g.rows();

  DirectionResult out;
  out.D = DenseMatrix(n, n);

  // With D = 0 the first residual is -G, projected.
  DenseMatrix r = scaled(g, -1.0);
  zero_diagonal(r);

  double rs_old = inner(r, r);
  out.final_residual_sq = rs_old;
  if (rs_old < residual_tol) return out;  // gradient has no off-diagonal part

  DenseMatrix p = r;
  for (int l = 0; l < max_iterations; ++l) {
    const DenseMatrix hp = apply_hessian_sym(g, x_inv, p);
    const double curvature = inner(p, hp);
    if (curvature <= 0.0) break;

    const double alpha = rs_old / curvature;
    out.D = add_scaled(out.D, alpha, p);
    zero_diagonal(out.D);
    r = add_scaled(r, -alpha, hp);
    zero_diagonal(r);

    ++out.cg_iterations;
    const double rs_new = inner(r, r);
    out.final_residual_sq = rs_new;
    if (rs_new < residual_tol) break;

    p = add_scaled(r, rs_new / rs_old, p);
    rs_old = rs_new;
  }
  return out;
}

}  // namespace dpopt
