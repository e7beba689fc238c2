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

#ifndef DPOPT_RNG_HPP
#define DPOPT_RNG_HPP

#include <cmath>
#include <cstdint>
#include <numbers>

namespace dpopt {

/// splitmix64: the public-domain 64-bit generator of Steele, Lea and
/// Vigna. The algorithm is pinned (rather than std::mt19937_64) so workloads
/// are reproducible bit-for-bit from the recorded seed across toolchains.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next_u64() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1), 53-bit resolution.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform in {0, ..., bound-1}. Modulo bias is below 2^-50 for the
  /// bounds used here (domain sizes, attribute cardinalities).
  uint64_t next_below(uint64_t bound) { return next_u64() % bound; }

  bool next_bernoulli(double p) { return next_double() < p; }

  /// Standard normal via Box-Muller; consumes exactly two uniforms per call.
  double next_gaussian() {
    const double u1 = 1.0 - next_double();  // (0, 1], keeps log finite
    const double u2 = next_double();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

 private:
  uint64_t state_;
};

}  // namespace dpopt

#endif  // DPOPT_RNG_HPP
