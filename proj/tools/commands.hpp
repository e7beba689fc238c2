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

#ifndef DPOPT_TOOLS_COMMANDS_HPP
#define DPOPT_TOOLS_COMMANDS_HPP

#include <string>

#include <CLI11.hpp>

#include "dpopt/homotopy.hpp"
#include "dpopt/solver.hpp"

namespace dpopt::cli {

// Stable exit codes: 0 success, 2 usage, 3 I/O, 4 numeric/domain failure.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;
inline constexpr int kExitDomain = 4;

struct GenerateOptions {
  std::string family;
  int m = 0;
  int n = 0;
  double p = 0.5;
  int s = 0;  // 0 means "use the default rank"
  uint64_t seed = 0;
  std::string out;
};

struct OptimizeOptions {
  std::string workload;
  std::string out;  // artifact prefix
  SolverConfig cfg;
  std::string scaling = "meandiag";
  bool homotopy = false;
  HomotopySchedule schedule;
};

struct EvaluateOptions {
  std::string workload;
  std::string strategy;
  double epsilon = 0.1;
  double delta = 1e-4;
  int trials = 10000;
  uint64_t seed = 0;
  std::string out;
  std::string csv;  // optional comparison table to append to
};

struct SweepOptions {
  std::string family;
  std::vector<int> n_list;
  std::vector<int> m_list;
  double p = 0.5;
  int s = 0;
  double epsilon = 0.1;
  double delta = 1e-4;
  double theta = 1e-3;
  std::string scaling = "meandiag";
  int trials = 0;  // 0 skips the Monte-Carlo column
  uint64_t seed = 0;
  std::string out;
};

void register_generate(CLI::App& app, GenerateOptions& opts);
void register_optimize(CLI::App& app, OptimizeOptions& opts);
void register_evaluate(CLI::App& app, EvaluateOptions& opts);
void register_sweep(CLI::App& app, SweepOptions& opts);

int run_generate(const GenerateOptions& opts);
int run_optimize(const OptimizeOptions& opts);
int run_evaluate(const EvaluateOptions& opts);
int run_sweep(const SweepOptions& opts);

}  // namespace dpopt::cli

#endif  // DPOPT_TOOLS_COMMANDS_HPP
