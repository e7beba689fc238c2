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

#include <fstream>
#include <iostream>

#include "commands.hpp"
#include "dpopt/matrix_io.hpp"
#include "dpopt/mechanism.hpp"
#include "dpopt/serialization.hpp"
#include "dpopt/workload.hpp"

namespace dpopt::cli {

void register_evaluate(CLI::App& app, EvaluateOptions& opts) {
  CLI::App* cmd = app.add_subcommand(
      "evaluate", "Simulate the Gaussian mechanism and report errors");
  cmd->add_option("--workload", opts.workload, "Workload CSV path")->required();
  cmd->add_option("--strategy", opts.strategy, "Strategy CSV path (n x n)")->required();
  cmd->add_option("--epsilon", opts.epsilon, "Privacy epsilon (default 0.1)");
  cmd->add_option("--delta", opts.delta, "Privacy delta (default 1e-4)");
  cmd->add_option("--trials", opts.trials, "Monte-Carlo trials (default 10000)");
  cmd->add_option("--seed", opts.seed, "Seed for data vector and noise");
  cmd->add_option("--out", opts.out, "Report JSON path")->required();
  cmd->add_option("--csv", opts.csv, "Comparison CSV to append a row to");
}

int run_evaluate(const EvaluateOptions& opts) {
  if (opts.trials < 1) {
    std::cerr << "evaluate: --trials must be at least 1\n";
    return kExitUsage;
  }
  if (opts.epsilon <= 0.0 || opts.delta <= 0.0 || opts.delta >= 1.0) {
    std::cerr << "evaluate: need epsilon > 0 and delta in (0, 1)\n";
    return kExitUsage;
  }

  const WorkloadMatrix w = load_workload(opts.workload);
  const DenseMatrix a_raw = load_matrix_csv(opts.strategy);
  if (!a_raw.square() || a_raw.cols() != w.W.cols()) {
    std::cerr << "evaluate: strategy must be n x n with n matching the workload ("
              << a_raw.rows() << "x" << a_raw.cols() << " vs n = " << w.W.cols()
              << ")\n";
    return kExitDomain;
  }

  StrategyMatrix a;
  a.A = a_raw;
  a.col_norm_max = max_column_norm(a_raw);
  if (a.col_norm_max == 0.0) {
    std::cerr << "evaluate: strategy is all zero\n";
    return kExitDomain;
  }

  const PrivacyParams pp{opts.epsilon, opts.delta};
  Rng rng(opts.seed);
  const std::vector<double> x = synthetic_counts(w.W.cols(), rng);
  const ErrorReport report = evaluate_strategy(w.W, a, x, pp, opts.trials, rng);

  save_error_report(report, pp, w.W.rows(), w.W.cols(), opts.seed, opts.out);

  if (!opts.csv.empty()) {
    const bool fresh = !std::filesystem::exists(opts.csv);
    std::ofstream csv(opts.csv, std::ios::app);
    if (!csv) throw std::runtime_error("cannot open for writing: " + opts.csv);
    if (fresh) csv << comparison_csv_header();
    csv << comparison_csv_row(family_name(w.family), w.W.rows(), w.W.cols(), report);
  }

  std::cout << "analytic " << report.analytic_expected_error << ", empirical "
            << report.empirical_mean_error << " (" << report.trials
            << " trials), gm " << report.gm_baseline_error << ", ratio "
            << report.ratio_vs_gm << "\n";
  return kExitOk;
}

}  // namespace dpopt::cli
