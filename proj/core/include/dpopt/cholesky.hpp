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

#ifndef DPOPT_CHOLESKY_HPP
#define DPOPT_CHOLESKY_HPP

#include <optional>

#include "dpopt/matrix.hpp"

namespace dpopt {

/// Lower-triangular Cholesky factor L with L * L^T equal to the factored
/// matrix. Stored as a full row-major matrix with zeros above the diagonal;
/// all diagonal entries are strictly positive.
struct CholeskyFactor {
  DenseMatrix lower;
  int dim() const { return lower.rows(); }
};

/// Scale-relative pivot tolerance: a pivot <= pd_pivot_tol * max diagonal
/// entry declares the matrix not positive definite.
inline constexpr double kPdPivotTol = 1e-12;

/// Factor a symmetric matrix. Returns nullopt when the matrix is not
/// positive definite; the line search treats that as "reject step size".
std::optional<CholeskyFactor> cholesky(const DenseMatrix& m);

/// Same, but throws NotPositiveDefinite instead of returning nullopt.
CholeskyFactor cholesky_or_throw(const DenseMatrix& m, const char* context);

/// Inverse of the factored matrix via two triangular solves,
/// symmetrized against rounding drift.
DenseMatrix chol_inverse(const CholeskyFactor& f);

/// Solve L y = b in place.
void solve_lower(const DenseMatrix& lower, std::span<double> b);
/// Solve L^T y = b in place (upper-triangular back substitution on L^T).
void solve_lower_transposed(const DenseMatrix& lower, std::span<double> b);
/// Solve U y = b in place for an upper-triangular U.
void solve_upper(const DenseMatrix& upper, std::span<double> b);

/// Determinant of the factored matrix, prod_i L_ii^2.
double chol_determinant(const CholeskyFactor& f);

}  // namespace dpopt

#endif  // DPOPT_CHOLESKY_HPP
