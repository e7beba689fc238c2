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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dpopt/homotopy.hpp"
#include "dpopt/workload.hpp"
#include "test_util.hpp"

using namespace dpopt;
using namespace dpopt::test;

TEST_CASE("identity workload passes through every stage unchanged") {
  const HomotopyResult res = homotopy_solve(DenseMatrix::identity(4),
                                            HomotopySchedule{}, SolverConfig{});
  CHECK(max_abs_diff(res.X, DenseMatrix::identity(4)) == 0.0);
  for (const auto& t : res.stage_traces) {
    CHECK(t.iterations.size() == 1);
    CHECK(t.iterations[0].dir_norm == 0.0);
  }
}

TEST_CASE("default schedule runs eleven stages with a decade decay") {
  const HomotopyResult res = homotopy_solve(DenseMatrix::identity(3),
                                            HomotopySchedule{}, SolverConfig{});
  REQUIRE(res.stage_traces.size() == 11);
  double theta = 1.0;
  for (const auto& t : res.stage_traces) {
    CHECK(t.theta == doctest::Approx(theta).epsilon(1e-12));
    theta *= 0.1;
  }
  CHECK(res.stage_traces.back().theta == doctest::Approx(1e-10));
}

TEST_CASE("stage cap wins when theta_min is unreachable") {
  HomotopySchedule sched;
  sched.stages = 3;
  sched.theta_min = 1e-300;
  const HomotopyResult res =
      homotopy_solve(DenseMatrix::identity(2), sched, SolverConfig{});
  CHECK(res.stage_traces.size() == 4);  // stages 0..3 inclusive
}

TEST_CASE("canonical 2x2 workload reaches the closed-form optimum") {
  const DenseMatrix w{{1.0, 0.0}, {1.0, 1.0}, {0.0, 1.0}};  // W^T W = [[2,1],[1,2]]
  const HomotopyResult res = homotopy_solve(w, HomotopySchedule{}, SolverConfig{});
  const double f_final = res.stage_traces.back().iterations.back().objective;
  CHECK(rel_err(f_final, 2.0 + std::sqrt(3.0)) < 1e-4);
}

TEST_CASE("per-stage traces stay monotone") {
  const WorkloadMatrix w = gen_wrelated(12, 8, 8, 52);
  const HomotopyResult res = homotopy_solve(w.W, HomotopySchedule{}, SolverConfig{});
  for (const auto& t : res.stage_traces) {
    double prev = t.initial_objective;
    for (const auto& rec : t.iterations) {
      CHECK(rec.objective <= prev + 1e-12 * std::fabs(prev));
      prev = rec.objective;
    }
  }
}

TEST_CASE("warm start agrees with a cold start at the final theta") {
  const WorkloadMatrix w = gen_wrelated(12, 8, 8, 53);  // full rank
  const HomotopyResult warm = homotopy_solve(w.W, HomotopySchedule{}, SolverConfig{});
  const double f_warm = warm.stage_traces.back().iterations.back().objective;

  const GramMatrix v = build_gram(w.W, 1e-10, ThetaScaling::kRaw);
  const SolveResult cold = solve(v, SolverConfig{});
  const double f_cold = cold.trace.iterations.back().objective;

  CHECK(rel_err(f_warm, f_cold) < 1e-4);
}
