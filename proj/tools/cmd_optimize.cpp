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

#include <chrono>
#include <iostream>

#include "commands.hpp"
#include "dpopt/matrix_io.hpp"
#include "dpopt/mechanism.hpp"
#include "dpopt/serialization.hpp"
#include "dpopt/workload.hpp"

namespace dpopt::cli {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

}  // namespace

void register_optimize(CLI::App& app, OptimizeOptions& opts) {
  CLI::App* cmd = app.add_subcommand(
      "optimize", "Search the optimal strategy for a workload CSV");
  cmd->add_option("--workload", opts.workload, "Workload CSV path")->required();
  cmd->add_option("--out", opts.out,
                  "Artifact prefix; writes <out>.X.csv, <out>.A.csv, "
                  "<out>.trace.json, <out>.trace.csv")
      ->required();
  cmd->add_option("--theta", opts.cfg.theta, "Regularization (default 1e-3)");
  cmd->add_option("--scaling", opts.scaling,
                  "Theta scaling: raw|meandiag (default meandiag)");
  cmd->add_flag("--homotopy", opts.homotopy,
                "Continuation over decreasing theta (always raw scaling)");
  cmd->add_option("--theta0", opts.schedule.theta0, "Continuation start theta");
  cmd->add_option("--decay", opts.schedule.decay, "Continuation decay factor");
  cmd->add_option("--stages", opts.schedule.stages, "Continuation stage cap");
  cmd->add_option("--theta-min", opts.schedule.theta_min, "Continuation stop theta");
  cmd->add_option("--max-outer", opts.cfg.max_outer, "Outer iteration cap");
  cmd->add_option("--max-linesearch", opts.cfg.max_linesearch, "Line search cap");
  cmd->add_option("--cg-iters", opts.cfg.cg_iters, "CG iterations per direction");
  cmd->add_option("--beta", opts.cfg.beta, "Backtracking shrink factor");
  cmd->add_option("--sigma", opts.cfg.sigma, "Sufficient-decrease constant");
  cmd->add_option("--rel-tol", opts.cfg.rel_tol, "Relative decrease stop tolerance");
}

int run_optimize(const OptimizeOptions& opts) {
  SolverConfig cfg = opts.cfg;
  cfg.scaling = scaling_from_name(opts.scaling);
  cfg.validate();

  const WorkloadMatrix w = load_workload(opts.workload);

  std::vector<ConvergenceTrace> traces;
  DenseMatrix x;
  double gram_ms = 0.0;
  double optimize_ms = 0.0;

  if (opts.homotopy) {
    const auto t0 = Clock::now();
    HomotopyResult res = homotopy_solve(w.W, opts.schedule, cfg);
    optimize_ms = ms_since(t0);
    x = std::move(res.X);
    traces = std::move(res.stage_traces);
  } else {
    const auto tg = Clock::now();
    const GramMatrix v = build_gram(w.W, cfg.theta, cfg.scaling);
    gram_ms = ms_since(tg);

    const auto t0 = Clock::now();
    SolveResult res = solve(v, cfg);
    optimize_ms = ms_since(t0);
    x = std::move(res.X);
    traces.push_back(std::move(res.trace));
  }

  const StrategyMatrix a = extract_strategy(x);

  const std::string prefix = opts.out;
  save_matrix_csv(x, prefix + ".X.csv");
  save_matrix_csv(a.A, prefix + ".A.csv");
  save_traces_json(traces, cfg, prefix + ".trace.json");
  save_traces_csv(traces, cfg, prefix + ".trace.csv");

  const ConvergenceTrace& last = traces.back();
  std::cout << "objective " << last.iterations.back().objective << " after "
            << last.iterations.size() << " iterations ("
            << termination_name(last.termination) << "), gram " << gram_ms
            << " ms, optimize " << optimize_ms << " ms\n";
  return kExitOk;
}

}  // namespace dpopt::cli
