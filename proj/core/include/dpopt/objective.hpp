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

#ifndef DPOPT_OBJECTIVE_HPP
#define DPOPT_OBJECTIVE_HPP

#include "dpopt/cholesky.hpp"
#include "dpopt/matrix.hpp"

namespace dpopt {

/// How the regularization shift is scaled when forming V from W.
///   Raw:      V = W^T W + theta * I
///   MeanDiag: V = W^T W + theta * mean(diag(W^T W)) * I
/// MeanDiag is the default because it is scale invariant across workloads;
/// Raw keeps the literal theta sequence needed by the continuation driver.
enum class ThetaScaling { kRaw, kMeanDiag };

/// The data of the convex objective F(X) = <X^{-1}, V>.
struct GramMatrix {
  DenseMatrix V;
  double theta = 0.0;
  ThetaScaling scaling = ThetaScaling::kMeanDiag;
  /// The multiple of I actually added to W^T W (theta, or theta * mean diag).
  double effective_shift = 0.0;

  int dim() const { return V.rows(); }
};

/// Builds V = W^T W plus the scaled shift. Throws NotPositiveDefinite when
/// the result fails its Cholesky check (theta = 0 with rank-deficient W).
GramMatrix build_gram(const DenseMatrix& w, double theta,
                      ThetaScaling scaling = ThetaScaling::kMeanDiag);

/// F(X) = <X^{-1}, V>, evaluated from a precomputed inverse.
double eval_objective(const DenseMatrix& x_inv, const GramMatrix& v);

/// G(X) = -X^{-1} V X^{-1}; symmetric, negative definite for V > 0.
DenseMatrix eval_gradient(const DenseMatrix& x_inv, const GramMatrix& v);

/// Action of the Hessian on a direction without forming the n^2 x n^2
/// operator: mat(H vec(D)) = -G D X^{-1} - X^{-1} D G.
DenseMatrix hess_vec(const DenseMatrix& g, const DenseMatrix& x_inv,
                     const DenseMatrix& d);

/// Analytic sandwich on the optimal objective value, computed from the
/// singular spectrum of W:
///   lower = max(2*||W||_* - n, ||W||_*^2 / n) + theta
///   upper = rho^2 * (||W||_F^2 + theta*n)
/// rho is the largest column 2-norm of the right-singular-vector matrix
/// (rows above the numerical-rank cutoff); rho = 1 for full-rank W.
struct BoundsReport {
  double lower = 0.0;
  double upper = 0.0;
  double nuclear_norm = 0.0;
  double rho = 0.0;
};

BoundsReport objective_bounds(const DenseMatrix& w, double theta);

/// Eigenvalue bounds holding on the level set {X : F(X) <= F(X0)}:
/// C1 I <= X <= C2 I, C3 I <= H(X) <= C4 I, C5 I <= -G(X) <= C6 I.
/// Diagnostic only; the solver never consumes these.
struct LevelSetConstants {
  double c1 = 0.0;
  double c2 = 0.0;
  double c3 = 0.0;
  double c4 = 0.0;
  double c5 = 0.0;
  double c6 = 0.0;
};

/// f0 must be the objective at the solver's actual start point.
LevelSetConstants level_set_constants(const GramMatrix& v, double f0, int n);

}  // namespace dpopt

#endif  // DPOPT_OBJECTIVE_HPP
