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

#ifndef DPOPT_MATRIX_HPP
#define DPOPT_MATRIX_HPP

#include <initializer_list>
#include <span>
#include <vector>

#include "dpopt/errors.hpp"

namespace dpopt {

/// Dense real matrix, row-major storage. Matrices are value types and are
/// immutable once handed to another component; all kernels below are pure
/// functions of their inputs.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), v_(static_cast<size_t>(rows) * cols, 0.0) {
    DPOPT_CHECK(rows >= 1 && cols >= 1);
  }
  DenseMatrix(std::initializer_list<std::initializer_list<double>> rows);

  static DenseMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  double& operator()(int i, int j) { return v_[static_cast<size_t>(i) * cols_ + j]; }
  double operator()(int i, int j) const { return v_[static_cast<size_t>(i) * cols_ + j]; }

  double* row(int i) { return v_.data() + static_cast<size_t>(i) * cols_; }
  const double* row(int i) const { return v_.data() + static_cast<size_t>(i) * cols_; }

  std::span<const double> values() const { return v_; }

  bool all_finite() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> v_;
};

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix transpose(const DenseMatrix& a);

/// Euclidean (Frobenius) inner product sum_ij a_ij * b_ij.
double inner(const DenseMatrix& a, const DenseMatrix& b);
double frobenius_norm(const DenseMatrix& a);
/// Sum of squared entries, accumulated in row-major order.
double sum_squares(const DenseMatrix& a);
double trace(const DenseMatrix& a);

/// a + alpha * b, elementwise.
DenseMatrix add_scaled(const DenseMatrix& a, double alpha, const DenseMatrix& b);
DenseMatrix scaled(const DenseMatrix& a, double alpha);
/// (a + a^T) / 2. Keeps the diagonal bit-identical.
DenseMatrix symmetrized(const DenseMatrix& a);

/// Matrix-vector product a*x.
std::vector<double> matvec(const DenseMatrix& a, std::span<const double> x);

/// True when max_ij |a_ij - a_ji| <= rel_tol * max(1, max_ij |a_ij|).
bool is_symmetric(const DenseMatrix& a, double rel_tol = 1e-12);

}  // namespace dpopt

#endif  // DPOPT_MATRIX_HPP
