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

#include "dpopt/homotopy.hpp"

namespace dpopt {

void HomotopySchedule::validate() const {
  DPOPT_CHECK(theta0 > 0.0);
  DPOPT_CHECK(decay > 0.0 && decay < 1.0);
  DPOPT_CHECK(stages >= 0);
  DPOPT_CHECK(theta_min > 0.0);
}

HomotopyResult homotopy_solve(const DenseMatrix& w, const HomotopySchedule& sched,
                              const SolverConfig& cfg) {
  sched.validate();
  HomotopyResult out;
  out.X = DenseMatrix::identity(w.cols());

  double theta = sched.theta0;
  for (int stage = 0;; ++stage) {
    GramMatrix v = build_gram(w, theta, ThetaScaling::kRaw);
    SolveResult res = solve(v, cfg, out.X);
    out.X = std::move(res.X);
    out.stage_traces.push_back(std::move(res.trace));

    if (theta <= sched.theta_min || stage == sched.stages) break;
    theta *= sched.decay;
  }
  return out;
}

}  // namespace dpopt
