// Copyright 2026 The chordset Authors
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

#include "chordset/chord_scan.hpp"
#include "chordset/hopf.hpp"
#include "chordset/integer_hopf.hpp"
#include "chordset/interval_union.hpp"

namespace {

using namespace chordset;

void BM_IsAdditiveCanonical(benchmark::State& state) {
  const auto v = canonical_vn(state.range(0)).v();
  for (auto _ : state) benchmark::DoNotOptimize(is_additive(v));
}
BENCHMARK(BM_IsAdditiveCanonical)->Arg(5)->Arg(20)->Arg(50);

void BM_KFoldSum(benchmark::State& state) {
  const OpenIntervalUnion w{OpenInterval(Rational(1, 3), Rational(7, 20)),
                            OpenInterval(Rational(9, 20), Rational(1, 2))};
  for (auto _ : state) benchmark::DoNotOptimize(k_fold_sum(w, state.range(0)));
}
BENCHMARK(BM_KFoldSum)->Arg(2)->Arg(8)->Arg(32);

void BM_Enumerate(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate(static_cast<int>(state.range(0)), state.range(1)));
  }
}
BENCHMARK(BM_Enumerate)->Args({3, 40})->Args({4, 40})->Unit(benchmark::kMillisecond);

void BM_ChordPresent(benchmark::State& state) {
  const auto f = make_sinesum(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(chord_present(f, 0.233843));
}
BENCHMARK(BM_ChordPresent)->Arg(1)->Arg(3)->Arg(5);

void BM_Scan(benchmark::State& state) {
  const auto f = make_sinesum(3);
  ScanParams p;
  p.ell_res = 1.0 / static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(scan(f, p));
}
BENCHMARK(BM_Scan)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
