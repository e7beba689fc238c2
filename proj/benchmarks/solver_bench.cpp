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

#include <benchmark/benchmark.h>

#include "dpopt/newton_cg.hpp"
#include "dpopt/solver.hpp"
#include "dpopt/workload.hpp"

namespace {

using namespace dpopt;

void BM_DirectionSolve(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const WorkloadMatrix w = gen_wrange(2 * n, n, 11);
  const GramMatrix v = build_gram(w.W, 1e-3, ThetaScaling::kMeanDiag);
  const Iterate it = initial_iterate(v);
  for (auto _ : state)
    benchmark::DoNotOptimize(solve_direction(it.X_inv, it.G, 5));
}
BENCHMARK(BM_DirectionSolve)->Arg(64)->Arg(128)->Arg(256);

void BM_Solve(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const WorkloadMatrix w = gen_wrange(2 * n, n, 12);
  const GramMatrix v = build_gram(w.W, 1e-3, ThetaScaling::kMeanDiag);
  for (auto _ : state) benchmark::DoNotOptimize(solve(v, SolverConfig{}));
}
BENCHMARK(BM_Solve)->Unit(benchmark::kMillisecond)->Arg(32)->Arg(64)->Arg(128);

// per-iteration solver cost for fixed n must not depend on m
void BM_SolveFixedIters(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const WorkloadMatrix w = gen_wrange(m, 128, 13);
  const GramMatrix v = build_gram(w.W, 1e-3, ThetaScaling::kMeanDiag);
  SolverConfig cfg;
  cfg.rel_tol = 0.0;
  cfg.max_outer = 5;
  for (auto _ : state) benchmark::DoNotOptimize(solve(v, cfg));
}
BENCHMARK(BM_SolveFixedIters)
    ->Unit(benchmark::kMillisecond)
    ->Arg(128)
    ->Arg(512)
    ->Arg(2048);

}  // namespace

BENCHMARK_MAIN();
