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

#include "dpopt/eigen_sym.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace dpopt {

namespace {

double off_diagonal_norm(const DenseMatrix& b) {
  double s = 0.0;
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j)
      if (i != j) s += b(i, j) * b(i, j);
  return std::sqrt(s);
}

// One Jacobi rotation annihilating b(p,q); accumulates into q_acc.
void rotate(DenseMatrix& b, DenseMatrix& q_acc, int p, int q) {
  const double bpq = b(p, q);
  if (bpq == 0.0) return;
  const double tau = (b(q, q) - b(p, p)) / (2.0 * bpq);
  double t;
  if (tau >= 0.0)
    t = 1.0 / (tau + std::sqrt(1.0 + tau * tau));
  else
    t = -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  const int n = b.rows();
  for (int k = 0; k < n; ++k) {
    const double bkp = b(k, p);
    const double bkq = b(k, q);
    b(k, p) = c * bkp - s * bkq;
    b(k, q) = s * bkp + c * bkq;
  }
  for (int k = 0; k < n; ++k) {
    const double bpk = b(p, k);
    const double bqk = b(q, k);
    b(p, k) = c * bpk - s * bqk;
    b(q, k) = s * bpk + c * bqk;
  }
  b(p, q) = 0.0;
  b(q, p) = 0.0;

  for (int k = 0; k < n; ++k) {
    const double qkp = q_acc(k, p);
    const double qkq = q_acc(k, q);
    q_acc(k, p) = c * qkp - s * qkq;
    q_acc(k, q) = s * qkp + c * qkq;
  }
}

}  // namespace

EigenDecomposition sym_eigen(const DenseMatrix& m) {
  DPOPT_CHECK(m.square());
  DPOPT_CHECK(is_symmetric(m, 1e-12));
  const int n = m.rows();

  DenseMatrix b = symmetrized(m);
  DenseMatrix q = DenseMatrix::identity(n);
  const double norm = frobenius_norm(m);
  const double tol = 1e-12 * norm;

  constexpr int kMaxSweeps = 100;
  int sweep = 0;
  while (off_diagonal_norm(b) > tol && norm > 0.0) {
    if (++sweep > kMaxSweeps)
      throw std::logic_error("sym_eigen: Jacobi sweep cap exceeded");
    // threshold sweep: skip entries already below the per-element floor
    const double elem_floor = tol / (n * n);
    for (int p = 0; p < n - 1; ++p)
      for (int qq = p + 1; qq < n; ++qq)
        if (std::fabs(b(p, qq)) > elem_floor) rotate(b, q, p, qq);
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return b(i, i) < b(j, j); });

  EigenDecomposition out;
  out.values.resize(n);
  out.vectors = DenseMatrix(n, n);
  for (int j = 0; j < n; ++j) {
    out.values[j] = b(order[j], order[j]);
    for (int i = 0; i < n; ++i) out.vectors(i, j) = q(i, order[j]);
  }
  return out;
}

}  // namespace dpopt
