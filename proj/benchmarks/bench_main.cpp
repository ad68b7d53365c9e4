// Copyright 2026 The tvec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "fixtures.hpp"
#include "tvec/gl2.hpp"
#include "tvec/induced.hpp"
#include "tvec/kernel_oracle.hpp"
#include "tvec/trilinear.hpp"

namespace {

using namespace tvec;

void BM_EnumerateCosets(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_cosets(p, n).size());
}
BENCHMARK(BM_EnumerateCosets)->Args({2, 4})->Args({3, 3})->Args({5, 2});

void BM_LemmaSweep(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  const RepSpec spec = fixtures::unramified_pair(p, 0)[0];
  for (auto _ : state) {
    benchmark::DoNotOptimize(lemma_sweep(spec, 2, GammaVariant::kMinusAlpha, 10, 20'000'000));
  }
}
BENCHMARK(BM_LemmaSweep)->Arg(2)->Arg(3);

void BM_Phi(benchmark::State& state) {
  const auto s = fixtures::unramified_pair_triple(3, 0, false);
  const TrilinearContext ctx = make_context(s[0], s[1], s[2]);
  const InducedVector v = ctx.v3_vector.gamma_translate(2);
  for (auto _ : state) benchmark::DoNotOptimize(phi(ctx, v).value);
}
BENCHMARK(BM_Phi);

void BM_Descent(benchmark::State& state) {
  const auto s = fixtures::unramified_pair_triple(3, 0, false);
  const TrilinearContext ctx = make_context(s[0], s[1], s[2]);
  for (auto _ : state) {
    benchmark::DoNotOptimize(descent_solve(ctx, {{0, 0, 0}, {ctx.n3, 0, 0}}).rank);
  }
}
BENCHMARK(BM_Descent)->Unit(benchmark::kMillisecond);

void BM_KernelOracle(benchmark::State& state) {
  const auto s = fixtures::unramified_pair_triple(3, 0, false);
  const TrilinearContext ctx = make_context(s[0], s[1], s[2]);
  const auto f = tensor_vectors(ctx, {ctx.n3, 0, 0});
  for (auto _ : state) benchmark::DoNotOptimize(kernel_oracle(f[0], f[1], f[2]).value);
}
BENCHMARK(BM_KernelOracle)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
