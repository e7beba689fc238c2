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

#include <iostream>

#include "commands.hpp"
#include "dpopt/serialization.hpp"
#include "dpopt/workload.hpp"

namespace dpopt::cli {

namespace {

std::filesystem::path meta_path(const std::filesystem::path& out) {
  std::filesystem::path p = out;
  p.replace_extension(".meta.json");
  return p;
}

}  // namespace

void register_generate(CLI::App& app, GenerateOptions& opts) {
  CLI::App* cmd =
      app.add_subcommand("generate", "Generate a synthetic workload matrix");
  cmd->add_option("--family", opts.family,
                  "Workload family: wdiscrete|wrange|wmarginal|wrelated")
      ->required();
  cmd->add_option("--m", opts.m, "Number of queries (rows)")->required();
  cmd->add_option("--n", opts.n, "Number of unit counts (columns)")->required();
  cmd->add_option("--p", opts.p, "Bernoulli parameter for wdiscrete (default 0.5)");
  cmd->add_option("--s", opts.s,
                  "Rank parameter for wrelated (default ceil(0.5*min(m,n)))");
  cmd->add_option("--seed", opts.seed, "Generator seed")->required();
  cmd->add_option("--out", opts.out, "Output CSV path; metadata JSON lands beside it")
      ->required();
}

int run_generate(const GenerateOptions& opts) {
  if (opts.m < 1 || opts.n < 1) {
    std::cerr << "generate: --m and --n must be positive\n";
    return kExitUsage;
  }

  WorkloadMatrix w;
  const WorkloadFamily family = family_from_name(opts.family);
  switch (family) {
    case WorkloadFamily::kDiscrete:
      if (opts.p <= 0.0 || opts.p >= 1.0) {
        std::cerr << "generate: --p must lie in (0, 1)\n";
        return kExitUsage;
      }
      w = gen_wdiscrete(opts.m, opts.n, opts.p, opts.seed);
      break;
    case WorkloadFamily::kRange:
      w = gen_wrange(opts.m, opts.n, opts.seed);
      break;
    case WorkloadFamily::kMarginal:
      w = gen_wmarginal(opts.m, opts.n, opts.seed);
      break;
    case WorkloadFamily::kRelated: {
      const int s = opts.s > 0 ? opts.s : default_related_rank(opts.m, opts.n);
      if (s < 1 || s > std::min(opts.m, opts.n)) {
        std::cerr << "generate: --s must lie in [1, min(m, n)]\n";
        return kExitUsage;
      }
      w = gen_wrelated(opts.m, opts.n, s, opts.seed);
      break;
    }
    case WorkloadFamily::kExternal:
      std::cerr << "generate: 'external' is not a generator family\n";
      return kExitUsage;
  }

  save_workload(w, opts.out);
  save_workload_meta(w, meta_path(opts.out));
  std::cout << "wrote " << opts.out << " (" << opts.m << "x" << opts.n << ") and "
            << meta_path(opts.out).string() << "\n";
  return kExitOk;
}

}  // namespace dpopt::cli
