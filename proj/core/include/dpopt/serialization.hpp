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

#ifndef DPOPT_SERIALIZATION_HPP
#define DPOPT_SERIALIZATION_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "dpopt/mechanism.hpp"
#include "dpopt/solver.hpp"
#include "dpopt/workload.hpp"

namespace dpopt {

const char* scaling_name(ThetaScaling s);
ThetaScaling scaling_from_name(const std::string& name);

/// Trace export: one JSON object per run with the config echo, the
/// per-iteration array, the termination reason and wall-clock milliseconds.
/// Continuation runs append one entry per stage, tagged with its theta.
std::string traces_to_json(const std::vector<ConvergenceTrace>& traces,
                           const SolverConfig& cfg);
void save_traces_json(const std::vector<ConvergenceTrace>& traces,
                      const SolverConfig& cfg, const std::filesystem::path& path);

/// Flat CSV (iter, F, dnorm, alpha, cg_iters, ls_trials); multi-stage runs
/// get stage and theta columns in front. A leading '#' comment line carries
/// the config echo.
void save_traces_csv(const std::vector<ConvergenceTrace>& traces,
                     const SolverConfig& cfg, const std::filesystem::path& path);

/// Generation metadata JSON: family, dimensions, parameters, seed.
std::string workload_meta_to_json(const WorkloadMatrix& w);
void save_workload_meta(const WorkloadMatrix& w, const std::filesystem::path& path);

/// ErrorReport JSON; carries both the total error and the per-query average,
/// plus the echoed privacy parameters and seed.
std::string error_report_to_json(const ErrorReport& r, const PrivacyParams& pp,
                                 int m, int n, uint64_t seed);
void save_error_report(const ErrorReport& r, const PrivacyParams& pp, int m, int n,
                       uint64_t seed, const std::filesystem::path& path);

/// Comparison CSV: header + one row per evaluated instance.
std::string comparison_csv_header();
std::string comparison_csv_row(const std::string& family, int m, int n,
                               const ErrorReport& r);

}  // namespace dpopt

#endif  // DPOPT_SERIALIZATION_HPP
