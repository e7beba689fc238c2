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
#include "dpopt/errors.hpp"

namespace cli = dpopt::cli;

int main(int argc, char** argv) {
  CLI::App app{
      "dpopt: workload-aware strategy optimization for linear queries under "
      "(epsilon, delta)-differential privacy"};
  app.require_subcommand(1);

  cli::GenerateOptions gen;
  cli::OptimizeOptions opt;
  cli::EvaluateOptions eval;
  cli::SweepOptions sweep;
  cli::register_generate(app, gen);
  cli::register_optimize(app, opt);
  cli::register_evaluate(app, eval);
  cli::register_sweep(app, sweep);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kExitUsage;
  }

  try {
    if (app.got_subcommand("generate")) return cli::run_generate(gen);
    if (app.got_subcommand("optimize")) return cli::run_optimize(opt);
    if (app.got_subcommand("evaluate")) return cli::run_evaluate(eval);
    if (app.got_subcommand("sweep")) return cli::run_sweep(sweep);
  } catch (const dpopt::MalformedFile& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kExitIo;
  } catch (const dpopt::NotPositiveDefinite& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kExitDomain;
  } catch (const dpopt::InfeasibleGram& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kExitDomain;
  } catch (const dpopt::ZeroStrategy& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kExitDomain;
  } catch (const std::logic_error& e) {
    // invalid flag values surface as contract violations
    std::cerr << "error: " << e.what() << "\n";
    return cli::kExitUsage;
  } catch (const std::runtime_error& e) {
    // remaining runtime errors come from the filesystem layer
    std::cerr << "error: " << e.what() << "\n";
    return cli::kExitIo;
  }
  return cli::kExitUsage;
}
