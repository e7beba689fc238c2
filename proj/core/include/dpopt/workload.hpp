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

#ifndef DPOPT_WORKLOAD_HPP
#define DPOPT_WORKLOAD_HPP

#include <array>
#include <filesystem>
#include <map>
#include <string>

#include "dpopt/matrix.hpp"
#include "dpopt/rng.hpp"

namespace dpopt {

enum class WorkloadFamily { kDiscrete, kRange, kMarginal, kRelated, kExternal };

const char* family_name(WorkloadFamily f);
/// Throws std::invalid_argument for unknown names.
WorkloadFamily family_from_name(const std::string& name);

/// An m x n batch of linear aggregate queries over n unit counts, plus the
/// provenance needed to regenerate it (family, seed, generator parameters).
struct WorkloadMatrix {
  DenseMatrix W;
  WorkloadFamily family = WorkloadFamily::kExternal;
  uint64_t seed = 0;
  /// Generator parameters by name (p, s, attr_size, ...); echoed into
  /// metadata so every workload is reproducible from its artifacts.
  std::map<std::string, double> params;
};

/// Entries i.i.d. Bernoulli(p) in {0,1}; all-zero rows are resampled
/// (capped at 1000 attempts per row, then an error).
WorkloadMatrix gen_wdiscrete(int m, int n, double p, uint64_t seed);

/// Each row is the indicator of an interval [a, b] in {1..n}; a and b are
/// drawn independently and uniformly, then ordered.
WorkloadMatrix gen_wrange(int m, int n, uint64_t seed);

/// Two-way marginal queries over the domain factored into 4 attributes of
/// size ceil(n^(1/4)) each (cells with linear index >= n are dropped). Each
/// query fixes uniform values on a uniform pair of distinct attributes.
WorkloadMatrix gen_wmarginal(int m, int n, uint64_t seed);

/// The attribute size used by gen_wmarginal: smallest d with d^4 >= n.
int marginal_attribute_size(int n);

/// Low-rank product W = C * A with C (m x s) and A (s x n) i.i.d. standard
/// normal; rank(W) = s almost surely.
WorkloadMatrix gen_wrelated(int m, int n, int s, uint64_t seed);
/// Mid-range default for the rank parameter: ceil(0.5 * min(m, n)).
int default_related_rank(int m, int n);

/// Matrix CSV round trip; load rejects matrices with no nonzero entry.
WorkloadMatrix load_workload(const std::filesystem::path& path);
void save_workload(const WorkloadMatrix& w, const std::filesystem::path& path);

}  // namespace dpopt

#endif  // DPOPT_WORKLOAD_HPP
