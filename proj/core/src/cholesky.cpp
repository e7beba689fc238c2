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

#include "dpopt/cholesky.hpp"

#include <cmath>
#include <string>

namespace dpopt {

std::optional<CholeskyFactor> cholesky(const DenseMatrix& m) {
  DPOPT_CHECK(m.square());
  const int n = m.rows();

  double max_diag = m(0, 0);
  for (int i = 1; i < n; ++i) max_diag = std::max(max_diag, m(i, i));
  if (max_diag <= 0.0) return std::nullopt;
  const double pivot_floor = kPdPivotTol * max_diag;

  DenseMatrix l(n, n);
  for (int j = 0; j < n; ++j) {
    const double* lj = l.row(j);
    double d = m(j, j);
    for (int k = 0; k < j; ++k) d -= lj[k] * lj[k];
    if (d <= pivot_floor) return std::nullopt;
    const double ljj = std::sqrt(d);
    l(j, j) = ljj;
    for (int i = j + 1; i < n; ++i) {
      const double* li = l.row(i);
      double s = m(i, j);
      for (int k = 0; k < j; ++k) s -= li[k] * lj[k];
      l(i, j) = s / ljj;
    }
  }
  return CholeskyFactor{std::move(l)};
}

CholeskyFactor cholesky_or_throw(const DenseMatrix& m, const char* context) {
  auto f = cholesky(m);
  if (!f) throw NotPositiveDefinite(std::string(context) + ": matrix is not positive definite");
  return std::move(*f);
}

void solve_lower(const DenseMatrix& lower, std::span<double> b) {
  const int n = lower.rows();
  DPOPT_CHECK(static_cast<int>(b.size()) == n);
  for (int i = 0; i < n; ++i) {
    const double* li = lower.row(i);
    double s = b[i];
    for (int k = 0; k < i; ++k) s -= li[k] * b[k];
    b[i] = s / li[i];
  }
}

void solve_lower_transposed(const DenseMatrix& lower, std::span<double> b) {
  const int n = lower.rows();
  DPOPT_CHECK(static_cast<int>(b.size()) == n);
  for (int i = n - 1; i >= 0; --i) {
    double s = b[i];
    for (int k = i + 1; k < n; ++k) s -= lower(k, i) * b[k];
    b[i] = s / lower(i, i);
  }
}

void solve_upper(const DenseMatrix& upper, std::span<double> b) {
  const int n = upper.rows();
  DPOPT_CHECK(static_cast<int>(b.size()) == n);
  for (int i = n - 1; i >= 0; --i) {
    const double* ui = upper.row(i);
    double s = b[i];
    for (int k = i + 1; k < n; ++k) s -= ui[k] * b[k];
    b[i] = s / ui[i];
  }
}

DenseMatrix chol_inverse(const CholeskyFactor& f) {
  const int n = f.dim();
  const DenseMatrix& l = f.lower;

  // y = L^{-1}, lower triangular.
  DenseMatrix y(n, n);
  for (int j = 0; j < n; ++j) {
    y(j, j) = 1.0 / l(j, j);
    for (int i = j + 1; i < n; ++i) {
      const double* li = l.row(i);
      double s = 0.0;
      for (int k = j; k < i; ++k) s -= li[k] * y(k, j);
      y(i, j) = s / li[i];
    }
  }

  // inv = y^T y; only the lower triangle is accumulated, then mirrored.
  DenseMatrix inv(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= i; ++j) {
      double s = 0.0;
      for (int k = i; k < n; ++k) s += y(k, i) * y(k, j);
      inv(i, j) = s;
      inv(j, i) = s;
    }
  }
  return inv;
}

double chol_determinant(const CholeskyFactor& f) {
  double d = 1.0;
  for (int i = 0; i < f.dim(); ++i) {
    const double lii = f.lower(i, i);
    d *= lii * lii;
  }
  return d;
}

}  // namespace dpopt
