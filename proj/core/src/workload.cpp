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

#include "dpopt/workload.hpp"

#include <algorithm>
#include <stdexcept>

#include "dpopt/matrix_io.hpp"

namespace dpopt {

namespace {

constexpr int kMaxRowResamples = 1000;

[[noreturn]] void resample_cap_exceeded(const char* family) {
  throw std::runtime_error(std::string(family) +
                           ": could not draw a nonzero query row in 1000 attempts");
}

bool row_all_zero(const DenseMatrix& w, int i) {
  for (int j = 0; j < w.cols(); ++j)
    if (w(i, j) != 0.0) return false;
  return true;
}

}  // namespace

const char* family_name(WorkloadFamily f) {
  switch (f) {
    case WorkloadFamily::kDiscrete: return "wdiscrete";
    case WorkloadFamily::kRange: return "wrange";
    case WorkloadFamily::kMarginal: return "wmarginal";
    case WorkloadFamily::kRelated: return "wrelated";
    case WorkloadFamily::kExternal: return "external";
  }
  return "unknown";
}

WorkloadFamily family_from_name(const std::string& name) {
  if (name == "wdiscrete") return WorkloadFamily::kDiscrete;
  if (name == "wrange") return WorkloadFamily::kRange;
  if (name == "wmarginal") return WorkloadFamily::kMarginal;
  if (name == "wrelated") return WorkloadFamily::kRelated;
  if (name == "external") return WorkloadFamily::kExternal;
  throw std::invalid_argument("unknown workload family: " + name);
}

WorkloadMatrix gen_wdiscrete(int m, int n, double p, uint64_t seed) {
  DPOPT_CHECK(m >= 1 && n >= 1);
  DPOPT_CHECK(p > 0.0 && p < 1.0);
  Rng rng(seed);
  DenseMatrix w(m, n);
  for (int i = 0; i < m; ++i) {
    int attempts = 0;
    do {
      if (++attempts > kMaxRowResamples) resample_cap_exceeded("wdiscrete");
      for (int j = 0; j < n; ++j) w(i, j) = rng.next_bernoulli(p) ? 1.0 : 0.0;
    } while (row_all_zero(w, i));
  }
  return {std::move(w), WorkloadFamily::kDiscrete, seed, {{"p", p}}};
}

WorkloadMatrix gen_wrange(int m, int n, uint64_t seed) {
  DPOPT_CHECK(m >= 1 && n >= 1);
  Rng rng(seed);
  DenseMatrix w(m, n);
  for (int i = 0; i < m; ++i) {
    int a = static_cast<int>(rng.next_below(static_cast<uint64_t>(n)));
    int b = static_cast<int>(rng.next_below(static_cast<uint64_t>(n)));
    if (a > b) std::swap(a, b);
    for (int j = a; j <= b; ++j) w(i, j) = 1.0;
  }
  return {std::move(w), WorkloadFamily::kRange, seed, {}};
}

int marginal_attribute_size(int n) {
  int d = 1;
  while (static_cast<long long>(d) * d * d * d < n) ++d;
  return d;
}

WorkloadMatrix gen_wmarginal(int m, int n, uint64_t seed) {
  DPOPT_CHECK(m >= 1 && n >= 1);
  const int d = marginal_attribute_size(n);
  // unordered attribute pairs of a 4-attribute domain
  static constexpr int kPairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};

  Rng rng(seed);
  DenseMatrix w(m, n);
  for (int i = 0; i < m; ++i) {
    int attempts = 0;
    do {
      if (++attempts > kMaxRowResamples) resample_cap_exceeded("wmarginal");
      for (int j = 0; j < n; ++j) w(i, j) = 0.0;
      const int* pair = kPairs[rng.next_below(6)];
      const int va = static_cast<int>(rng.next_below(static_cast<uint64_t>(d)));
      const int vb = static_cast<int>(rng.next_below(static_cast<uint64_t>(d)));
      // cell index is the mixed-radix number (a0 a1 a2 a3) base d;
      // cells with index >= n fall outside the domain and stay dropped
      for (int cell = 0; cell < n; ++cell) {
        int digits[4];
        int rest = cell;
        for (int k = 3; k >= 0; --k) {
          digits[k] = rest % d;
          rest /= d;
        }
        if (digits[pair[0]] == va && digits[pair[1]] == vb) w(i, cell) = 1.0;
      }
    } while (row_all_zero(w, i));
  }
  return {std::move(w), WorkloadFamily::kMarginal, seed, {{"attr_size", double(d)}}};
}

int default_related_rank(int m, int n) { return (std::min(m, n) + 1) / 2; }

WorkloadMatrix gen_wrelated(int m, int n, int s, uint64_t seed) {
  DPOPT_CHECK(m >= 1 && n >= 1);
  DPOPT_CHECK(s >= 1 && s <= std::min(m, n));
  Rng rng(seed);
  DenseMatrix c(m, s);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < s; ++j) c(i, j) = rng.next_gaussian();
  DenseMatrix a(s, n);
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = rng.next_gaussian();
  return {matmul(c, a), WorkloadFamily::kRelated, seed, {{"s", double(s)}}};
}

WorkloadMatrix load_workload(const std::filesystem::path& path) {
  DenseMatrix w = load_matrix_csv(path);
  bool any_nonzero = false;
  for (double x : w.values())
    if (x != 0.0) {
      any_nonzero = true;
      break;
    }
  if (!any_nonzero)
    throw MalformedFile(path.string() + ": workload has no nonzero entry");
  return {std::move(w), WorkloadFamily::kExternal, 0, {}};
}

void save_workload(const WorkloadMatrix& w, const std::filesystem::path& path) {
  save_matrix_csv(w.W, path);
}

}  // namespace dpopt
