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

#include "dpopt/mechanism.hpp"

#include <cmath>
#include <optional>

namespace dpopt {

namespace {

// 2 ln(2/delta) / epsilon^2; shared by the analytic error and the GM
// baseline so that "expected_error(W, I) == gm_baseline(W)" holds exactly.
double error_factor(const PrivacyParams& pp) {
  return 2.0 * std::log(2.0 / pp.delta) / (pp.epsilon * pp.epsilon);
}

bool is_upper_triangular(const DenseMatrix& a) {
  for (int i = 1; i < a.rows(); ++i)
    for (int j = 0; j < i; ++j)
      if (a(i, j) != 0.0) return false;
  return true;
}

// Applies A^{-1} to vectors: back substitution for the triangular factor
// from the optimizer, the normal-equations route (A^T A) z = A^T b for a
// general square strategy. The factorization is done once.
class StrategyApplier {
 public:
  explicit StrategyApplier(const DenseMatrix& a) : a_(a) {
    DPOPT_CHECK(a.square());
    if (!is_upper_triangular(a)) {
      gram_chol_ = cholesky_or_throw(symmetrized(matmul(transpose(a), a)),
                                     "strategy pseudo-inverse");
    }
  }

  std::vector<double> apply_inverse(std::span<const double> b) const {
    std::vector<double> z(b.begin(), b.end());
    if (!gram_chol_) {
      solve_upper(a_, z);
      return z;
    }
    std::vector<double> atb(a_.cols(), 0.0);
    for (int i = 0; i < a_.rows(); ++i)
      for (int j = 0; j < a_.cols(); ++j) atb[j] += a_(i, j) * z[i];
    solve_lower(gram_chol_->lower, atb);
    solve_lower_transposed(gram_chol_->lower, atb);
    return atb;
  }

 private:
  const DenseMatrix& a_;
  std::optional<CholeskyFactor> gram_chol_;
};

std::vector<double> answer_impl(const DenseMatrix& w, const StrategyApplier& inv,
                                int strategy_rows, std::span<const double> x,
                                double scale, Rng& rng) {
  DPOPT_CHECK(static_cast<int>(x.size()) == w.cols());
  std::vector<double> b(strategy_rows);
  for (double& bi : b) bi = scale * rng.next_gaussian();
  std::vector<double> y = inv.apply_inverse(b);
  for (size_t i = 0; i < y.size(); ++i) y[i] += x[i];
  return matvec(w, y);
}

}  // namespace

double PrivacyParams::h() const { return epsilon / std::sqrt(2.0 * std::log(2.0 / delta)); }

void PrivacyParams::validate() const {
  DPOPT_CHECK(epsilon > 0.0);
  DPOPT_CHECK(delta > 0.0 && delta < 1.0);
}

double max_column_norm(const DenseMatrix& a) {
  double best_sq = 0.0;
  for (int j = 0; j < a.cols(); ++j) {
    double s = 0.0;
    for (int i = 0; i < a.rows(); ++i) s += a(i, j) * a(i, j);
    best_sq = std::max(best_sq, s);
  }
  return std::sqrt(best_sq);
}

StrategyMatrix extract_strategy(const DenseMatrix& x) {
  CholeskyFactor f = cholesky_or_throw(x, "extract_strategy");
  StrategyMatrix s;
  s.A = transpose(f.lower);
  s.col_norm_max = max_column_norm(s.A);
  return s;
}

StrategyMatrix normalize_strategy(const DenseMatrix& a) {
  const double norm = max_column_norm(a);
  if (norm == 0.0) throw ZeroStrategy("normalize_strategy: strategy is all zero");
  StrategyMatrix s;
  s.A = scaled(a, 1.0 / norm);
  s.col_norm_max = max_column_norm(s.A);
  return s;
}

double noise_scale(const StrategyMatrix& a, const PrivacyParams& pp) {
  pp.validate();
  return a.col_norm_max / pp.h();
}

std::vector<double> answer_queries(const DenseMatrix& w, const StrategyMatrix& a,
                                   std::span<const double> x,
                                   const PrivacyParams& pp, Rng& rng) {
  return answer_queries_with_scale(w, a, x, noise_scale(a, pp), rng);
}

std::vector<double> answer_queries_with_scale(const DenseMatrix& w,
                                              const StrategyMatrix& a,
                                              std::span<const double> x,
                                              double scale, Rng& rng) {
  DPOPT_CHECK(w.cols() == a.A.cols());
  StrategyApplier inv(a.A);
  return answer_impl(w, inv, a.A.rows(), x, scale, rng);
}

double expected_error(const DenseMatrix& w, const DenseMatrix& x,
                      const PrivacyParams& pp) {
  pp.validate();
  DPOPT_CHECK(w.cols() == x.rows());
  const CholeskyFactor f = cholesky_or_throw(x, "expected_error");
  const DenseMatrix x_inv = chol_inverse(f);
  const DenseMatrix wx = matmul(w, x_inv);
  return error_factor(pp) * inner(wx, w);  // <W X^{-1}, W> = tr(W X^{-1} W^T)
}

double strategy_expected_error(const DenseMatrix& w, const StrategyMatrix& a,
                               const PrivacyParams& pp) {
  DPOPT_CHECK(w.cols() == a.A.cols());
  const double scale = noise_scale(a, pp);
  StrategyApplier inv(a.A);
  // ||W A^{-1}||_F^2, one column of A^{-1} at a time
  const int n = a.A.cols();
  std::vector<double> e(n, 0.0);
  double sum = 0.0;
  for (int j = 0; j < n; ++j) {
    e[j] = 1.0;
    std::vector<double> col = inv.apply_inverse(e);
    std::vector<double> wcol = matvec(w, col);
    for (double v : wcol) sum += v * v;
    e[j] = 0.0;
  }
  return scale * scale * sum;
}

double gm_baseline(const DenseMatrix& w, const PrivacyParams& pp) {
  pp.validate();
  return error_factor(pp) * sum_squares(w);
}

EmpiricalError empirical_error(const DenseMatrix& w, const StrategyMatrix& a,
                               std::span<const double> x, const PrivacyParams& pp,
                               int trials, Rng& rng) {
  DPOPT_CHECK(trials >= 1);
  DPOPT_CHECK(w.cols() == a.A.cols());
  const double scale = noise_scale(a, pp);
  StrategyApplier inv(a.A);
  const std::vector<double> exact = matvec(w, x);

  double sum = 0.0, sum_sq = 0.0;
  for (int t = 0; t < trials; ++t) {
    const std::vector<double> noisy = answer_impl(w, inv, a.A.rows(), x, scale, rng);
    double err = 0.0;
    for (size_t i = 0; i < noisy.size(); ++i) {
      const double d = noisy[i] - exact[i];
      err += d * d;
    }
    sum += err;
    sum_sq += err * err;
  }

  EmpiricalError out;
  out.trials = trials;
  out.mean = sum / trials;
  if (trials > 1) {
    const double var = std::max(0.0, (sum_sq - sum * sum / trials) / (trials - 1));
    out.std_error = std::sqrt(var / trials);
  }
  return out;
}

ErrorReport evaluate_strategy(const DenseMatrix& w, const StrategyMatrix& a,
                              std::span<const double> x, const PrivacyParams& pp,
                              int trials, Rng& rng) {
  ErrorReport r;
  r.analytic_expected_error = strategy_expected_error(w, a, pp);
  r.gm_baseline_error = gm_baseline(w, pp);
  r.ratio_vs_gm = r.analytic_expected_error / r.gm_baseline_error;
  const EmpiricalError emp = empirical_error(w, a, x, pp, trials, rng);
  r.empirical_mean_error = emp.mean;
  r.empirical_std_error = emp.std_error;
  r.trials = emp.trials;
  return r;
}

std::vector<double> synthetic_counts(int n, Rng& rng) {
  std::vector<double> x(n);
  for (double& xi : x) xi = static_cast<double>(rng.next_below(1001));
  return x;
}

}  // namespace dpopt
