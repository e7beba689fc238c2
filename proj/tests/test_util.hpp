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

// Shared generators and independent oracles. Everything here is test-only
// and deliberately avoids the code paths it is used to check: derivatives
// come from finite differences, constrained quadratic minimizers from a
// dense pivoted elimination, optima from closed forms or grid search.

#ifndef DPOPT_TEST_UTIL_HPP
#define DPOPT_TEST_UTIL_HPP

#include <cmath>
#include <vector>

#include "dpopt/eigen_sym.hpp"
#include "dpopt/matrix.hpp"
#include "dpopt/objective.hpp"
#include "dpopt/rng.hpp"

namespace dpopt::test {

inline double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b) {
  double d = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) d = std::max(d, std::fabs(a(i, j) - b(i, j)));
  return d;
}

inline double rel_err(double got, double want) {
  return std::fabs(got - want) / std::max(1e-300, std::fabs(want));
}

inline DenseMatrix random_matrix(int rows, int cols, Rng& rng, double lo = -1.0,
                                 double hi = 1.0) {
  DenseMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = lo + (hi - lo) * rng.next_double();
  return m;
}

inline DenseMatrix random_symmetric(int n, Rng& rng) {
  return symmetrized(random_matrix(n, n, rng));
}

/// B^T B + shift I: symmetric positive definite.
inline DenseMatrix random_spd(int n, Rng& rng, double shift = 0.5) {
  DenseMatrix b = random_matrix(n, n, rng);
  DenseMatrix m = symmetrized(matmul(transpose(b), b));
  for (int i = 0; i < n; ++i) m(i, i) += shift;
  return m;
}

/// Random correlation matrix: unit diagonal, positive definite.
inline DenseMatrix random_correlation(int n, Rng& rng) {
  DenseMatrix m = random_spd(n, rng, 0.5 + 0.5 * n);
  DenseMatrix c(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) c(i, j) = m(i, j) / std::sqrt(m(i, i) * m(j, j));
  return symmetrized(c);
}

/// Orthogonal matrix from the eigenvectors of a random symmetric matrix.
inline DenseMatrix random_orthogonal(int n, Rng& rng) {
  return sym_eigen(random_symmetric(n, rng)).vectors;
}

/// Q diag(lambda) Q^T for a prescribed spectrum.
inline DenseMatrix with_spectrum(const DenseMatrix& q, const std::vector<double>& lambda) {
  const int n = q.rows();
  DenseMatrix scaled_q(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) scaled_q(i, j) = q(i, j) * lambda[j];
  return symmetrized(matmul(scaled_q, transpose(q)));
}

/// Central finite difference of the objective along direction D.
/// The step follows h = 1e-5 * max(1, ||X||_F).
double objective_directional_fd(const DenseMatrix& x, const GramMatrix& v,
                                const DenseMatrix& d);

/// Central finite difference of the gradient along direction D.
DenseMatrix gradient_directional_fd(const DenseMatrix& x, const GramMatrix& v,
                                    const DenseMatrix& d);

/// Dense solve of min <D,G> + 1/2 vec(D)^T H vec(D) s.t. diag(D) = 0 by
/// eliminating the diagonal coordinates and solving the reduced system with
/// pivoted Gaussian elimination. H = -G (x) X^{-1} - X^{-1} (x) G.
DenseMatrix dense_constrained_direction(const DenseMatrix& x_inv, const DenseMatrix& g);

/// <X^{-1}, V> computed through a Cholesky solve; throws if X is not PD.
double objective_at(const DenseMatrix& x, const GramMatrix& v);

/// Exhaustive grid search over the off-diagonal entries (step `step`,
/// range (-0.99, 0.99)) with PD filtering. n must be 2 or 3.
double grid_search_optimum(const GramMatrix& v, double step = 1e-2);

}  // namespace dpopt::test

#endif  // DPOPT_TEST_UTIL_HPP
