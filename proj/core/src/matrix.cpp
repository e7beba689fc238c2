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

#include "dpopt/matrix.hpp"

#include <cmath>
#include <sstream>

namespace dpopt {

namespace detail {
void check_failed(const char* expr, const char* file, int line) {
  std::ostringstream os;
  os << "contract violation: " << expr << " at " << file << ":" << line;
  throw std::logic_error(os.str());
}
}  // namespace detail

DenseMatrix::DenseMatrix(std::initializer_list<std::initializer_list<double>> rows) {
  rows_ = static_cast<int>(rows.size());
  DPOPT_CHECK(rows_ >= 1);
  cols_ = static_cast<int>(rows.begin()->size());
  DPOPT_CHECK(cols_ >= 1);
  v_.reserve(static_cast<size_t>(rows_) * cols_);
  for (const auto& r : rows) {
    DPOPT_CHECK(static_cast<int>(r.size()) == cols_);
    v_.insert(v_.end(), r.begin(), r.end());
  }
}

DenseMatrix DenseMatrix::identity(int n) {
  DenseMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

bool DenseMatrix::all_finite() const {
  for (double x : v_) {
    if (!std::isfinite(x)) return false;
  }
  return true;
}

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b) {
  DPOPT_CHECK(a.cols() == b.rows());
  DenseMatrix c(a.rows(), b.cols());
  const int m = b.cols();
  // i-k-j order streams rows of b; zero multipliers are skipped (exact no-ops)
  // which pays off for 0/1 workload matrices.
  for (int i = 0; i < a.rows(); ++i) {
    double* ci = c.row(i);
    for (int k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      const double* bk = b.row(k);
      for (int j = 0; j < m; ++j) ci[j] += aik * bk[j];
    }
  }
  return c;
}

DenseMatrix transpose(const DenseMatrix& a) {
  DenseMatrix t(a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

double inner(const DenseMatrix& a, const DenseMatrix& b) {
  DPOPT_CHECK(a.rows() == b.rows() && a.cols() == b.cols());
  double s = 0.0;
  auto va = a.values();
  auto vb = b.values();
  for (size_t k = 0; k < va.size(); ++k) s += va[k] * vb[k];
  return s;
}

double sum_squares(const DenseMatrix& a) {
  double s = 0.0;
  for (double x : a.values()) s += x * x;
  return s;
}

double frobenius_norm(const DenseMatrix& a) { return std::sqrt(sum_squares(a)); }

double trace(const DenseMatrix& a) {
  DPOPT_CHECK(a.square());
  double s = 0.0;
  for (int i = 0; i < a.rows(); ++i) s += a(i, i);
  return s;
}

DenseMatrix add_scaled(const DenseMatrix& a, double alpha, const DenseMatrix& b) {
  DPOPT_CHECK(a.rows() == b.rows() && a.cols() == b.cols());
  DenseMatrix c(a.rows(), a.cols());
  auto va = a.values();
  auto vb = b.values();
  for (int i = 0; i < a.rows(); ++i) {
    double* ci = c.row(i);
    const size_t off = static_cast<size_t>(i) * a.cols();
    for (int j = 0; j < a.cols(); ++j) ci[j] = va[off + j] + alpha * vb[off + j];
  }
  return c;
}

DenseMatrix scaled(const DenseMatrix& a, double alpha) {
  DenseMatrix c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(i, j) = alpha * a(i, j);
  return c;
}

DenseMatrix symmetrized(const DenseMatrix& a) {
  DPOPT_CHECK(a.square());
  DenseMatrix s(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i) {
    s(i, i) = a(i, i);
    for (int j = i + 1; j < a.cols(); ++j) {
      const double v = 0.5 * (a(i, j) + a(j, i));
      s(i, j) = v;
      s(j, i) = v;
    }
  }
  return s;
}

std::vector<double> matvec(const DenseMatrix& a, std::span<const double> x) {
  DPOPT_CHECK(static_cast<int>(x.size()) == a.cols());
  std::vector<double> y(a.rows(), 0.0);
  for (int i = 0; i < a.rows(); ++i) {
    const double* ai = a.row(i);
    double s = 0.0;
    for (int j = 0; j < a.cols(); ++j) s += ai[j] * x[j];
    y[i] = s;
  }
  return y;
}

bool is_symmetric(const DenseMatrix& a, double rel_tol) {
  if (!a.square()) return false;
  double scale = 1.0;
  for (double x : a.values()) scale = std::max(scale, std::fabs(x));
  for (int i = 0; i < a.rows(); ++i)
    for (int j = i + 1; j < a.cols(); ++j)
      if (std::fabs(a(i, j) - a(j, i)) > rel_tol * scale) return false;
  return true;
}

}  // namespace dpopt
