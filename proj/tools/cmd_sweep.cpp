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

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "commands.hpp"
#include "dpopt/mechanism.hpp"
#include "dpopt/serialization.hpp"
#include "dpopt/workload.hpp"

namespace dpopt::cli {

namespace {

using Clock = std::chrono::steady_clock;

struct GridPoint {
  int n = 0;
  int m = 0;
  uint64_t seed = 0;
};

struct RowResult {
  std::string status = "ok";
  double gram_ms = 0.0;
  double optimize_ms = 0.0;
  double evaluate_ms = 0.0;
  int outer_iters = 0;
  double objective = 0.0;
  ErrorReport report;
  bool has_empirical = false;
};

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

WorkloadMatrix generate_point(const SweepOptions& opts, const GridPoint& gp) {
  switch (family_from_name(opts.family)) {
    case WorkloadFamily::kDiscrete:
      return gen_wdiscrete(gp.m, gp.n, opts.p, gp.seed);
    case WorkloadFamily::kRange:
      return gen_wrange(gp.m, gp.n, gp.seed);
    case WorkloadFamily::kMarginal:
      return gen_wmarginal(gp.m, gp.n, gp.seed);
    case WorkloadFamily::kRelated: {
      const int s = opts.s > 0 ? opts.s : default_related_rank(gp.m, gp.n);
      return gen_wrelated(gp.m, gp.n, s, gp.seed);
    }
    default:
      throw std::invalid_argument("sweep: unsupported family " + opts.family);
  }
}

RowResult run_point(const SweepOptions& opts, const GridPoint& gp) {
  RowResult row;
  try {
    const WorkloadMatrix w = generate_point(opts, gp);

    const auto tg = Clock::now();
    const GramMatrix v = build_gram(w.W, opts.theta, scaling_from_name(opts.scaling));
    row.gram_ms = ms_since(tg);

    SolverConfig cfg;
    cfg.theta = opts.theta;
    cfg.scaling = v.scaling;
    const auto ts = Clock::now();
    const SolveResult res = solve(v, cfg);
    row.optimize_ms = ms_since(ts);
    row.outer_iters = static_cast<int>(res.trace.iterations.size());
    row.objective = res.trace.iterations.back().objective;

    const PrivacyParams pp{opts.epsilon, opts.delta};
    const auto te = Clock::now();
    const StrategyMatrix a = extract_strategy(res.X);
    row.report.analytic_expected_error = strategy_expected_error(w.W, a, pp);
    row.report.gm_baseline_error = gm_baseline(w.W, pp);
    row.report.ratio_vs_gm =
        row.report.analytic_expected_error / row.report.gm_baseline_error;
    if (opts.trials > 0) {
      Rng rng(gp.seed);
      const std::vector<double> x = synthetic_counts(gp.n, rng);
      const EmpiricalError emp = empirical_error(w.W, a, x, pp, opts.trials, rng);
      row.report.empirical_mean_error = emp.mean;
      row.report.empirical_std_error = emp.std_error;
      row.report.trials = emp.trials;
      row.has_empirical = true;
    }
    row.evaluate_ms = ms_since(te);
  } catch (const std::exception& e) {
    row.status = std::string("error: ") + e.what();
  }
  return row;
}

unsigned worker_count(size_t points) {
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("DPOPT_THREADS")) {
    const int v = std::atoi(env);
    if (v >= 1) threads = static_cast<unsigned>(v);
  }
  return static_cast<unsigned>(std::min<size_t>(threads, points));
}

}  // namespace

void register_sweep(CLI::App& app, SweepOptions& opts) {
  CLI::App* cmd = app.add_subcommand(
      "sweep", "Optimize and evaluate over a grid of (n, m) sizes");
  cmd->add_option("--family", opts.family, "Workload family")->required();
  cmd->add_option("--n-list", opts.n_list, "Domain sizes")->required()->delimiter(',');
  cmd->add_option("--m-list", opts.m_list, "Query counts")->required()->delimiter(',');
  cmd->add_option("--p", opts.p, "Bernoulli parameter for wdiscrete");
  cmd->add_option("--s", opts.s, "Rank parameter for wrelated");
  cmd->add_option("--epsilon", opts.epsilon, "Privacy epsilon");
  cmd->add_option("--delta", opts.delta, "Privacy delta");
  cmd->add_option("--theta", opts.theta, "Regularization");
  cmd->add_option("--scaling", opts.scaling, "Theta scaling: raw|meandiag");
  cmd->add_option("--trials", opts.trials, "Monte-Carlo trials per point (0 = skip)");
  cmd->add_option("--seed", opts.seed, "Base seed; per-point seeds derive from it");
  cmd->add_option("--out", opts.out, "Sweep CSV path")->required();
}

int run_sweep(const SweepOptions& opts) {
  if (opts.n_list.empty() || opts.m_list.empty()) {
    std::cerr << "sweep: the (n, m) grid is empty\n";
    return kExitUsage;
  }
  for (int n : opts.n_list)
    if (n < 1) {
      std::cerr << "sweep: n must be positive\n";
      return kExitUsage;
    }
  for (int m : opts.m_list)
    if (m < 1) {
      std::cerr << "sweep: m must be positive\n";
      return kExitUsage;
    }

  std::vector<GridPoint> grid;
  for (int n : opts.n_list)
    for (int m : opts.m_list)
      grid.push_back({n, m, opts.seed + 1000003ULL * grid.size()});

  std::vector<RowResult> rows(grid.size());
  std::atomic<size_t> cursor{0};
  const unsigned workers = worker_count(grid.size());
  {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) {
      pool.emplace_back([&] {
        for (size_t i = cursor.fetch_add(1); i < grid.size(); i = cursor.fetch_add(1))
          rows[i] = run_point(opts, grid[i]);
      });
    }
    for (auto& th : pool) th.join();
  }

  std::ofstream out(opts.out);
  if (!out) throw std::runtime_error("cannot open for writing: " + opts.out);
  out.precision(17);
  out << "# family=" << opts.family << " epsilon=" << opts.epsilon
      << " delta=" << opts.delta << " theta=" << opts.theta << " scaling="
      << opts.scaling << " trials=" << opts.trials << " base_seed=" << opts.seed
      << "\n";
  out << "family,m,n,seed,status,gram_ms,optimize_ms,evaluate_ms,outer_iters,"
         "objective,analytic,empirical,gm_baseline,ratio_vs_gm\n";
  for (size_t i = 0; i < grid.size(); ++i) {
    const RowResult& r = rows[i];
    out << opts.family << "," << grid[i].m << "," << grid[i].n << "," << grid[i].seed
        << "," << (r.status == "ok" ? "ok" : "error") << ",";
    if (r.status == "ok") {
      out << r.gram_ms << "," << r.optimize_ms << "," << r.evaluate_ms << ","
          << r.outer_iters << "," << r.objective << ","
          << r.report.analytic_expected_error << ",";
      if (r.has_empirical)
        out << r.report.empirical_mean_error;
      out << "," << r.report.gm_baseline_error << "," << r.report.ratio_vs_gm << "\n";
    } else {
      out << ",,,,,,,\n";
      std::cerr << "sweep point (n=" << grid[i].n << ", m=" << grid[i].m
                << ") failed: " << r.status << "\n";
    }
  }
  if (!out) throw std::runtime_error("write failed: " + opts.out);

  std::cout << "wrote " << grid.size() << " rows to " << opts.out << " using "
            << workers << " worker(s)\n";
  return kExitOk;
}

}  // namespace dpopt::cli
