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

#ifndef DPOPT_SOLVER_HPP
#define DPOPT_SOLVER_HPP

#include <functional>
#include <optional>
#include <vector>

#include "dpopt/cholesky.hpp"
#include "dpopt/objective.hpp"

namespace dpopt {

struct SolverConfig {
  double theta = 1e-3;  // >= 0; zero is only valid for full-rank W^T W
  ThetaScaling scaling = ThetaScaling::kMeanDiag;
  int max_outer = 30;
  int max_linesearch = 50;
  int cg_iters = 5;
  double cg_residual_tol = 1e-10;
  double beta = 0.5;    // step shrink factor, in (0, 1)
  double sigma = 1e-4;  // sufficient-decrease constant, in (0, 0.5)
  double rel_tol = 1e-5;

  void validate() const;
};

/// Current solution with everything derived from it: Cholesky factor,
/// cached inverse, gradient and objective value. diag(X) stays exactly 1;
/// the factor from the line-search PD check is reused for X^{-1}, G and F.
struct Iterate {
  DenseMatrix X;
  CholeskyFactor chol;
  DenseMatrix X_inv;
  DenseMatrix G;
  double F = 0.0;
};

enum class Termination { kRelTolReached, kMaxIterations, kLineSearchExhausted };

struct IterationRecord {
  int iter = 0;         // 1-based outer iteration index
  double objective = 0.0;
  double dir_norm = 0.0;  // ||D||_F, logged but not a stopping criterion
  double alpha = 0.0;     // 0 when the line search was exhausted
  int cg_iters = 0;       // 0 on the steepest-descent first iteration
  int ls_trials = 0;
};

struct ConvergenceTrace {
  double initial_objective = 0.0;
  std::vector<IterationRecord> iterations;
  Termination termination = Termination::kMaxIterations;
  double wall_ms = 0.0;
  double theta = 0.0;  // continuation stage tag; mirrors the gram's theta
};

struct SolveResult {
  DenseMatrix X;
  ConvergenceTrace trace;
};

/// Optional per-iteration hook (diagnostics, level-set checks in tests).
/// Called with the accepted iterate after each outer iteration.
using IterateObserver = std::function<void(int iter, const Iterate&)>;

/// Fully populated iterate at X0; X0 must have unit diagonal and pass the
/// Cholesky check. The default start point is the identity.
Iterate make_iterate(const GramMatrix& v, const DenseMatrix& x0);
Iterate initial_iterate(const GramMatrix& v);

/// Projected steepest descent -G with zeroed diagonal; used on the first
/// outer iteration where the quadratic model adds nothing at X0 = I.
DenseMatrix first_iteration_direction(const DenseMatrix& g);

struct LineSearchResult {
  double alpha = 0.0;
  int trials = 0;  // number of step sizes tried, including the accepted one
  Iterate next;
};

/// Backtracking search over alpha in {beta^0, beta^1, ...}: accepts the
/// first step where X + alpha*D passes the Cholesky PD check and satisfies
/// F(X + alpha*D) <= F(X) + alpha * sigma * <G, D>.
/// Returns nullopt after max_linesearch rejected trials.
std::optional<LineSearchResult> line_search(const Iterate& it, const DenseMatrix& d,
                                            const GramMatrix& v,
                                            const SolverConfig& cfg);

/// The Newton-like descent loop: direction solve (projected CG), Armijo
/// step-size search with Cholesky PD verification, iterate update.
/// Terminates on relative objective decrease <= rel_tol, the outer-iteration
/// cap, or an exhausted line search (graceful, returns the last accepted
/// iterate). Throws InfeasibleGram when V fails its Cholesky check.
SolveResult solve(const GramMatrix& v, const SolverConfig& cfg,
                  const IterateObserver& observer = {});
SolveResult solve(const GramMatrix& v, const SolverConfig& cfg,
                  const DenseMatrix& x0, const IterateObserver& observer = {});

const char* termination_name(Termination t);

}  // namespace dpopt

#endif  // DPOPT_SOLVER_HPP
