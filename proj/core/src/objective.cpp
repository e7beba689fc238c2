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

#include "dpopt/objective.hpp"

#include <algorithm>
#include <cmath>

#include "dpopt/eigen_sym.hpp"

namespace dpopt {

GramMatrix build_gram(const DenseMatrix& w, double theta, ThetaScaling scaling) {
  DPOPT_CHECK(theta >= 0.0);
  const int n = w.cols();
  DenseMatrix v = symmetrized(matmul(transpose(w), w));

  double shift = theta;
  if (scaling == ThetaScaling::kMeanDiag) {
    shift = theta * trace(v) / n;
  }
  for (int i = 0; i < n; ++i) v(i, i) += shift;

  if (!cholesky(v))
    throw NotPositiveDefinite(
        "build_gram: W^T W + shift is not positive definite; raise theta");

  GramMatrix g;
  g.V = std::move(v);
  g.theta = theta;
  g.scaling = scaling;
  g.effective_shift = shift;
  return g;
}

double eval_objective(const DenseMatrix& x_inv, const GramMatrix& v) {
  return inner(x_inv, v.V);
}

DenseMatrix eval_gradient(const DenseMatrix& x_inv, const GramMatrix& v) {
  DenseMatrix g = matmul(matmul(x_inv, v.V), x_inv);
  return symmetrized(scaled(g, -1.0));
}

DenseMatrix hess_vec(const DenseMatrix& g, const DenseMatrix& x_inv,
                     const DenseMatrix& d) {
  DenseMatrix t1 = matmul(matmul(g, d), x_inv);
  DenseMatrix t2 = matmul(matmul(x_inv, d), g);
  return add_scaled(scaled(t1, -1.0), -1.0, t2);
}

BoundsReport objective_bounds(const DenseMatrix& w, double theta) {
  DPOPT_CHECK(theta >= 0.0);
  const int n = w.cols();
  const DenseMatrix wtw = symmetrized(matmul(transpose(w), w));
  const EigenDecomposition eig = sym_eigen(wtw);

  double sigma_max = 0.0;
  for (double mu : eig.values) sigma_max = std::max(sigma_max, std::sqrt(std::max(mu, 0.0)));

  double nuclear = 0.0;
  for (double mu : eig.values) nuclear += std::sqrt(std::max(mu, 0.0));

  // rho over the columns of S (rows of S are the right singular vectors
  // above the numerical-rank cutoff). For full-rank W the kept rows form an
  // orthogonal matrix and rho is exactly 1.
  const double sigma_cut = 1e-10 * sigma_max;
  double rho_sq = 0.0;
  for (int j = 0; j < n; ++j) {
    double col = 0.0;
    for (int i = 0; i < n; ++i) {
      if (std::sqrt(std::max(eig.values[i], 0.0)) > sigma_cut)
        col += eig.vectors(j, i) * eig.vectors(j, i);
    }
    rho_sq = std::max(rho_sq, col);
  }

  BoundsReport r;
  r.nuclear_norm = nuclear;
  r.rho = std::sqrt(rho_sq);
  r.lower = std::max(2.0 * nuclear - n, nuclear * nuclear / n) + theta;
  r.upper = rho_sq * (sum_squares(w) + theta * n);
  return r;
}

LevelSetConstants level_set_constants(const GramMatrix& v, double f0, int n) {
  const EigenDecomposition eig = sym_eigen(v.V);
  const double lambda_min = eig.values.front();
  const double lambda_max = eig.values.back();
  DPOPT_CHECK(lambda_min > 0.0);

  const double denom = f0 / lambda_min - 1.0 + 1.0 / n;
  DPOPT_CHECK(denom > 0.0);

  LevelSetConstants c;
  c.c1 = 1.0 / denom;
  c.c2 = static_cast<double>(n);
  c.c3 = lambda_min / (c.c2 * c.c2 * c.c2);
  c.c4 = lambda_max / (c.c1 * c.c1 * c.c1);
  c.c5 = lambda_min / (c.c2 * c.c2);
  c.c6 = lambda_max / (c.c1 * c.c1);
  return c;
}

}  // namespace dpopt
