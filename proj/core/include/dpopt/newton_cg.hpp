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

#ifndef DPOPT_NEWTON_CG_HPP
#define DPOPT_NEWTON_CG_HPP

#include "dpopt/matrix.hpp"

namespace dpopt {

/// Approximate Newton direction restricted to the zero-diagonal subspace.
/// diag(D) is exactly zero (entries are assigned, not rounded); D inherits
/// symmetry from symmetric inputs.
struct DirectionResult {
  DenseMatrix D;
  int cg_iterations = 0;
  double final_residual_sq = 0.0;
};

/// Linear conjugate gradients on the quadratic model
///   f(D) = <D, G> + 1/2 vec(D)^T H vec(D),   H = -G (x) X^{-1} - X^{-1} (x) G,
/// projected onto diag(D) = 0. The constraint set is a coordinate subspace,
/// so zeroing the diagonal of iterate and residual is the exact projection.
/// Stops after `max_iterations` steps or when the squared residual norm
/// drops below `residual_tol`. If the curvature <P, H P> becomes nonpositive
/// (rounding noise; H is positive definite on the level set), the current
/// iterate is returned.
DirectionResult solve_direction(const DenseMatrix& x_inv, const DenseMatrix& g,
                                int max_iterations, double residual_tol = 1e-10);

}  // namespace dpopt

#endif  // DPOPT_NEWTON_CG_HPP
