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

#ifndef DPOPT_EIGEN_SYM_HPP
#define DPOPT_EIGEN_SYM_HPP

#include <vector>

#include "dpopt/matrix.hpp"

namespace dpopt {

/// Eigendecomposition of a symmetric matrix: values ascending,
/// orthonormal eigenvectors as the columns of `vectors`.
struct EigenDecomposition {
  std::vector<double> values;
  DenseMatrix vectors;
};

/// Cyclic Jacobi with threshold sweeps. Off-diagonal convergence at
/// 1e-12 * ||M||_F, sweep cap 100 (exceeding the cap is a defect, not a
/// recoverable error). Used for diagnostics and bounds only, never on the
/// solver hot path.
EigenDecomposition sym_eigen(const DenseMatrix& m);

}  // namespace dpopt

#endif  // DPOPT_EIGEN_SYM_HPP
