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

#include "dpopt/serialization.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace dpopt {

namespace {

using nlohmann::json;

json config_to_json(const SolverConfig& cfg) {
  return json{{"theta", cfg.theta},
              {"scaling", scaling_name(cfg.scaling)},
              {"max_outer", cfg.max_outer},
              {"max_linesearch", cfg.max_linesearch},
              {"cg_iters", cfg.cg_iters},
              {"cg_residual_tol", cfg.cg_residual_tol},
              {"beta", cfg.beta},
              {"sigma", cfg.sigma},
              {"rel_tol", cfg.rel_tol}};
}

json trace_to_json(const ConvergenceTrace& t) {
  json iters = json::array();
  for (const IterationRecord& r : t.iterations) {
    iters.push_back(json{{"iter", r.iter},
                         {"objective", r.objective},
                         {"dir_norm", r.dir_norm},
                         {"alpha", r.alpha},
                         {"cg_iters", r.cg_iters},
                         {"ls_trials", r.ls_trials}});
  }
  return json{{"theta", t.theta},
              {"initial_objective", t.initial_objective},
              {"iterations", std::move(iters)},
              {"termination", termination_name(t.termination)},
              {"wall_ms", t.wall_ms}};
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace

const char* scaling_name(ThetaScaling s) {
  return s == ThetaScaling::kRaw ? "raw" : "meandiag";
}

ThetaScaling scaling_from_name(const std::string& name) {
  if (name == "raw") return ThetaScaling::kRaw;
  if (name == "meandiag") return ThetaScaling::kMeanDiag;
  throw std::invalid_argument("unknown theta scaling: " + name);
}

std::string traces_to_json(const std::vector<ConvergenceTrace>& traces,
                           const SolverConfig& cfg) {
  json runs = json::array();
  for (const ConvergenceTrace& t : traces) runs.push_back(trace_to_json(t));
  json doc{{"config", config_to_json(cfg)}, {"runs", std::move(runs)}};
  return doc.dump(2) + "\n";
}

void save_traces_json(const std::vector<ConvergenceTrace>& traces,
                      const SolverConfig& cfg, const std::filesystem::path& path) {
  write_text(path, traces_to_json(traces, cfg));
}

void save_traces_csv(const std::vector<ConvergenceTrace>& traces,
                     const SolverConfig& cfg, const std::filesystem::path& path) {
  std::ostringstream os;
  os.precision(17);
  os << "# config: " << config_to_json(cfg).dump() << "\n";
  const bool staged = traces.size() > 1;
  os << (staged ? "stage,theta,iter,F,dnorm,alpha,cg_iters,ls_trials\n"
                : "iter,F,dnorm,alpha,cg_iters,ls_trials\n");
  for (size_t s = 0; s < traces.size(); ++s) {
    for (const IterationRecord& r : traces[s].iterations) {
      if (staged) os << s << "," << traces[s].theta << ",";
      os << r.iter << "," << r.objective << "," << r.dir_norm << "," << r.alpha
         << "," << r.cg_iters << "," << r.ls_trials << "\n";
    }
  }
  write_text(path, os.str());
}

std::string workload_meta_to_json(const WorkloadMatrix& w) {
  json params = json::object();
  for (const auto& [k, v] : w.params) params[k] = v;
  json doc{{"family", family_name(w.family)},
           {"m", w.W.rows()},
           {"n", w.W.cols()},
           {"seed", w.seed},
           {"params", std::move(params)}};
  return doc.dump(2) + "\n";
}

void save_workload_meta(const WorkloadMatrix& w, const std::filesystem::path& path) {
  write_text(path, workload_meta_to_json(w));
}

std::string error_report_to_json(const ErrorReport& r, const PrivacyParams& pp,
                                 int m, int n, uint64_t seed) {
  json doc{{"epsilon", pp.epsilon},
           {"delta", pp.delta},
           {"m", m},
           {"n", n},
           {"seed", seed},
           {"trials", r.trials},
           {"analytic_expected_error", r.analytic_expected_error},
           {"analytic_per_query", r.analytic_expected_error / m},
           {"empirical_mean_error", r.empirical_mean_error},
           {"empirical_per_query", r.empirical_mean_error / m},
           {"empirical_std_error", r.empirical_std_error},
           {"gm_baseline_error", r.gm_baseline_error},
           {"ratio_vs_gm", r.ratio_vs_gm}};
  return doc.dump(2) + "\n";
}

void save_error_report(const ErrorReport& r, const PrivacyParams& pp, int m, int n,
                       uint64_t seed, const std::filesystem::path& path) {
  write_text(path, error_report_to_json(r, pp, m, n, seed));
}

std::string comparison_csv_header() {
  return "family,m,n,analytic,empirical,gm_baseline,ratio_vs_gm\n";
}

std::string comparison_csv_row(const std::string& family, int m, int n,
                               const ErrorReport& r) {
  std::ostringstream os;
  os.precision(17);
  os << family << "," << m << "," << n << "," << r.analytic_expected_error << ","
     << r.empirical_mean_error << "," << r.gm_baseline_error << ","
     << r.ratio_vs_gm << "\n";
  return os.str();
}

}  // namespace dpopt
