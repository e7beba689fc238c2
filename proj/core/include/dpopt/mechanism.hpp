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

#ifndef DPOPT_MECHANISM_HPP
#define DPOPT_MECHANISM_HPP

#include <vector>

#include "dpopt/cholesky.hpp"
#include "dpopt/matrix.hpp"
#include "dpopt/rng.hpp"

namespace dpopt {

/// (epsilon, delta) privacy budget. The Gaussian mechanism adds noise with
/// standard deviation sensitivity / h(epsilon, delta),
/// h = epsilon / sqrt(2 ln(2/delta)).
struct PrivacyParams {
  double epsilon = 0.1;
  double delta = 1e-4;

  double h() const;
  void validate() const;  // epsilon > 0, delta in (0, 1)
};

/// Strategy queries answered under noise in place of the workload. From the
/// optimizer this is the upper-triangular Cholesky factor A with A^T A = X;
/// externally supplied square strategies are accepted too, so the column
/// norm (the l2 sensitivity over unit counts) is always recomputed from A.
struct StrategyMatrix {
  DenseMatrix A;
  double col_norm_max = 0.0;  // ||A||_{2,inf}
};

double max_column_norm(const DenseMatrix& a);

/// A = L^T from the Cholesky factorization X = L L^T, so A^T A = X.
/// Throws NotPositiveDefinite when X fails the factorization.
StrategyMatrix extract_strategy(const DenseMatrix& x);

/// A' = A / ||A||_{2,inf}; rescaling a strategy never changes the
/// mechanism's error. Throws ZeroStrategy for an all-zero A.
StrategyMatrix normalize_strategy(const DenseMatrix& a);

/// Noise standard deviation ||A||_{2,inf} * sqrt(2 ln(2/delta)) / epsilon.
double noise_scale(const StrategyMatrix& a, const PrivacyParams& pp);

/// One mechanism invocation: W (x + A^{-1} b) with b i.i.d. Gaussian at the
/// strategy's noise scale. Deterministic given the rng state.
std::vector<double> answer_queries(const DenseMatrix& w, const StrategyMatrix& a,
                                   std::span<const double> x,
                                   const PrivacyParams& pp, Rng& rng);

/// Same with an explicit noise standard deviation (scale 0 gives the exact
/// answers; used to pin the noiseless path in tests).
std::vector<double> answer_queries_with_scale(const DenseMatrix& w,
                                              const StrategyMatrix& a,
                                              std::span<const double> x,
                                              double scale, Rng& rng);

/// Total expected squared error over all m queries for a feasible
/// (unit-diagonal) X: (2 ln(2/delta) / epsilon^2) * tr(W X^{-1} W^T).
/// Data independent.
double expected_error(const DenseMatrix& w, const DenseMatrix& x,
                      const PrivacyParams& pp);

/// Expected error of an explicit strategy: noise_scale^2 * ||W A^{-1}||_F^2.
/// Agrees with expected_error when A^T A = X and diag(X) = 1.
double strategy_expected_error(const DenseMatrix& w, const StrategyMatrix& a,
                               const PrivacyParams& pp);

/// Plain Gaussian mechanism on the unit counts; equals expected_error with
/// X = I: (2 ln(2/delta) / epsilon^2) * ||W||_F^2.
double gm_baseline(const DenseMatrix& w, const PrivacyParams& pp);

struct EmpiricalError {
  double mean = 0.0;
  double std_error = 0.0;  // sample std / sqrt(trials)
  int trials = 0;
};

/// Monte-Carlo mean of ||answer - Wx||^2 over independent mechanism runs.
EmpiricalError empirical_error(const DenseMatrix& w, const StrategyMatrix& a,
                               std::span<const double> x, const PrivacyParams& pp,
                               int trials, Rng& rng);

/// Error summary for one (workload, strategy) pair.
struct ErrorReport {
  double analytic_expected_error = 0.0;  // total over all m queries
  double empirical_mean_error = 0.0;
  double empirical_std_error = 0.0;
  int trials = 0;
  double gm_baseline_error = 0.0;
  double ratio_vs_gm = 0.0;  // analytic / gm_baseline
};

ErrorReport evaluate_strategy(const DenseMatrix& w, const StrategyMatrix& a,
                              std::span<const double> x, const PrivacyParams& pp,
                              int trials, Rng& rng);

/// Synthetic unit-count vector: i.i.d. uniform integers in [0, 1000].
/// Stands in for real datasets; the mechanism's error does not depend on it.
std::vector<double> synthetic_counts(int n, Rng& rng);

}  // namespace dpopt

#endif  // DPOPT_MECHANISM_HPP
