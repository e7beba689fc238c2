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

#include "dpopt/cholesky.hpp"
#include "dpopt/eigen_sym.hpp"
#include "dpopt/matrix.hpp"
#include "dpopt/rng.hpp"

namespace {

using namespace dpopt;

DenseMatrix random_spd(int n, uint64_t seed) {
  Rng rng(seed);
  DenseMatrix b(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b(i, j) = rng.next_gaussian();
  DenseMatrix m = symmetrized(matmul(transpose(b), b));
  for (int i = 0; i < n; ++i) m(i, i) += 0.5 * n;
  return m;
}

void BM_Matmul(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const DenseMatrix a = random_spd(n, 1);
  const DenseMatrix b = random_spd(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(matmul(a, b));
  state.SetItemsProcessed(state.iterations() * int64_t(n) * n * n);
}
BENCHMARK(BM_Matmul)->Arg(64)->Arg(128)->Arg(256)->Arg(512);

void BM_Cholesky(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const DenseMatrix m = random_spd(n, 3);
  for (auto _ : state) benchmark::DoNotOptimize(cholesky(m));
}
BENCHMARK(BM_Cholesky)->Arg(64)->Arg(128)->Arg(256)->Arg(512);

void BM_CholInverse(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const CholeskyFactor f = *cholesky(random_spd(n, 4));
  for (auto _ : state) benchmark::DoNotOptimize(chol_inverse(f));
}
BENCHMARK(BM_CholInverse)->Arg(64)->Arg(128)->Arg(256)->Arg(512);

void BM_SymEigen(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const DenseMatrix m = random_spd(n, 5);
  for (auto _ : state) benchmark::DoNotOptimize(sym_eigen(m));
}
BENCHMARK(BM_SymEigen)->Arg(32)->Arg(64)->Arg(128);

}  // namespace

BENCHMARK_MAIN();
