// Copyright 2026 The Snackjack Authors
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

#include <benchmark/benchmark.h>

#include "snackjack/oracle.hpp"

namespace {

void BM_EnumerateAllRows(benchmark::State& state) {
  for (auto _ : state) {
    for (const auto& cls : snackjack::initial_classes()) {
      benchmark::DoNotOptimize(snackjack::enumerate_quadruple(cls));
    }
  }
}
BENCHMARK(BM_EnumerateAllRows)->Unit(benchmark::kMillisecond);

void BM_OverallExpectationExact(benchmark::State& state) {
  const snackjack::GameParams p(snackjack::Angle::pi_eighths(2), snackjack::Angle::pi_eighths(4));
  for (auto _ : state) benchmark::DoNotOptimize(snackjack::overall_expectation(p));
}
BENCHMARK(BM_OverallExpectationExact);

void BM_Sweep(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(snackjack::sweep(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Sweep)->Arg(9)->Arg(65)->Unit(benchmark::kMillisecond);

}  // namespace
