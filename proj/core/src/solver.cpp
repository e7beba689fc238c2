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

#include "dpopt/solver.hpp"

#include <chrono>
#include <cmath>

#include "dpopt/newton_cg.hpp"

namespace dpopt {

void SolverConfig::validate() const {
  DPOPT_CHECK(theta >= 0.0);
  DPOPT_CHECK(max_outer >= 1);
  DPOPT_CHECK(max_linesearch >= 1);
  DPOPT_CHECK(cg_iters >= 1);
  DPOPT_CHECK(cg_residual_tol >= 0.0);
  DPOPT_CHECK(beta > 0.0 && beta < 1.0);
  DPOPT_CHECK(sigma > 0.0 && sigma < 0.5);
  DPOPT_CHECK(rel_tol >= 0.0);
}

Iterate make_iterate(const GramMatrix& v, const DenseMatrix& x0) {
  Iterate it;
  it.X = symmetrized(x0);
  it.chol = cholesky_or_throw(it.X, "make_iterate");
  it.X_inv = chol_inverse(it.chol);
  it.G = eval_gradient(it.X_inv, v);
  it.F = eval_objective(it.X_inv, v);
  return it;
}

Iterate initial_iterate(const GramMatrix& v) {
  return make_iterate(v, DenseMatrix::identity(v.dim()));
}

DenseMatrix first_iteration_direction(const DenseMatrix& g) {
  DenseMatrix d = scaled(g, -1.0);
  for (int i = 0; i < d.rows(); ++i) d(i, i) = 0.0;
  return d;
}

std::optional<LineSearchResult> line_search(const Iterate& it, const DenseMatrix& d,
                                            const GramMatrix& v,
                                            const SolverConfig& cfg) {
  const double delta = inner(d, it.G);
  double alpha = 1.0;
  for (int t = 0; t < cfg.max_linesearch; ++t, alpha *= cfg.beta) {
    // diag(D) = 0, so the candidate keeps an exactly unit diagonal.
    DenseMatrix x_next = symmetrized(add_scaled(it.X, alpha, d));
    auto factor = cholesky(x_next);
    if (!factor) continue;

    DenseMatrix x_inv = chol_inverse(*factor);
    const double f_next = eval_objective(x_inv, v);
    if (f_next <= it.F + alpha * cfg.sigma * delta) {
      LineSearchResult res;
      res.alpha = alpha;
      res.trials = t + 1;
      res.next.X = std::move(x_next);
      res.next.chol = std::move(*factor);
      res.next.G = eval_gradient(x_inv, v);
      res.next.X_inv = std::move(x_inv);
      res.next.F = f_next;
      return res;
    }
  }
  return std::nullopt;
}

SolveResult solve(const GramMatrix& v, const SolverConfig& cfg,
                  const IterateObserver& observer) {
  return solve(v, cfg, DenseMatrix::identity(v.dim()), observer);
}

SolveResult solve(const GramMatrix& v, const SolverConfig& cfg,
                  const DenseMatrix& x0, const IterateObserver& observer) {
  cfg.validate();
  if (!cholesky(v.V))
    throw InfeasibleGram("solve: Gram matrix failed Cholesky; raise theta");

  const auto t_start = std::chrono::steady_clock::now();

  Iterate it = make_iterate(v, x0);

  SolveResult out;
  out.trace.initial_objective = it.F;
  out.trace.theta = v.theta;
  out.trace.termination = Termination::kMaxIterations;

  for (int iter = 1; iter <= cfg.max_outer; ++iter) {
    DenseMatrix d;
    int cg_iters = 0;
    if (iter == 1) {
      d = first_iteration_direction(it.G);
    } else {
      DirectionResult dir =
          solve_direction(it.X_inv, it.G, cfg.cg_iters, cfg.cg_residual_tol);
      d = symmetrized(dir.D);  // guards against rounding drift; diagonal stays 0
      cg_iters = dir.cg_iterations;
    }
    const double dir_norm = frobenius_norm(d);

    IterationRecord rec;
    rec.iter = iter;
    rec.dir_norm = dir_norm;
    rec.cg_iters = cg_iters;

    auto ls = line_search(it, d, v, cfg);
    if (!ls) {
      // graceful exit: keep the last accepted iterate
      rec.objective = it.F;
      rec.alpha = 0.0;
      rec.ls_trials = cfg.max_linesearch;
      out.trace.iterations.push_back(rec);
      out.trace.termination = Termination::kLineSearchExhausted;
      break;
    }

    const double f_prev = it.F;
    it = std::move(ls->next);
    rec.objective = it.F;
    rec.alpha = ls->alpha;
    rec.ls_trials = ls->trials;
    out.trace.iterations.push_back(rec);
    if (observer) observer(iter, it);

    if (std::fabs(f_prev - it.F) <= cfg.rel_tol * std::fabs(f_prev)) {
      out.trace.termination = Termination::kRelTolReached;
      break;
    }
  }

  out.X = std::move(it.X);
  out.trace.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t_start)
          .count();
  return out;
}

const char* termination_name(Termination t) {
  switch (t) {
    case Termination::kRelTolReached: return "rel_tol_reached";
    case Termination::kMaxIterations: return "max_iterations";
    case Termination::kLineSearchExhausted: return "line_search_exhausted";
  }
  return "unknown";
}

}  // namespace dpopt
