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

#ifndef DPOPT_HOMOTOPY_HPP
#define DPOPT_HOMOTOPY_HPP

#include "dpopt/solver.hpp"

namespace dpopt {

/// Geometric continuation schedule: theta_i = theta0 * decay^i. The stage
/// loop runs until theta_i <= theta_min or i == stages, whichever comes
/// first (both bounds inclusive, so the defaults solve 11 stages reaching
/// theta = 1e-10).
struct HomotopySchedule {
  double theta0 = 1.0;
  double decay = 0.1;   // in (0, 1)
  int stages = 10;
  double theta_min = 1e-10;

  void validate() const;
};

struct HomotopyResult {
  DenseMatrix X;
  std::vector<ConvergenceTrace> stage_traces;  // each tagged with its theta
};

/// Solves a sequence of problems with decreasing theta, warm-starting each
/// stage from the previous solution (stage 0 from the identity). The theta
/// sequence is applied raw so it is the literal schedule, independent of the
/// workload's diagonal scale. The constraint set does not depend on theta,
/// so every warm start is feasible.
HomotopyResult homotopy_solve(const DenseMatrix& w, const HomotopySchedule& sched,
                              const SolverConfig& cfg);

}  // namespace dpopt

#endif  // DPOPT_HOMOTOPY_HPP
