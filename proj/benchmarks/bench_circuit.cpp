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

#include "snackjack/circuit.hpp"

namespace {

using snackjack::Angle;
using snackjack::GameParams;
using snackjack::Rng;
using snackjack::StrategyOp;
namespace circuit = snackjack::circuit;

GameParams entangled() { return {Angle::pi_eighths(4), Angle::pi_eighths(4)}; }

void BM_PlayHandFaithful(benchmark::State& state) {
  const auto op = static_cast<StrategyOp>(state.range(0));
  circuit::GameConfig config{entangled(), op, circuit::CollapseMode::Faithful, 1};
  Rng rng(7);
  for (auto _ : state) benchmark::DoNotOptimize(circuit::play_hand(config, rng));
}
BENCHMARK(BM_PlayHandFaithful)->DenseRange(0, 3)->ArgName("strategy");

void BM_PlayHandEarlyCollapse(benchmark::State& state) {
  circuit::GameConfig config{entangled(), StrategyOp::Y, circuit::CollapseMode::EarlyCollapse, 1};
  Rng rng(7);
  for (auto _ : state) benchmark::DoNotOptimize(circuit::play_hand(config, rng));
}
BENCHMARK(BM_PlayHandEarlyCollapse);

void BM_DrawRound(benchmark::State& state) {
  const snackjack::Deal deal{{snackjack::CardSlot(0), snackjack::CardSlot(2)}, snackjack::CardSlot(4)};
  Rng rng(3);
  for (auto _ : state) {
    circuit::SparseState s(circuit::encode(deal));
    s.x(snackjack::qsim::layout::kPlayerStrategy.qubit(0));
    benchmark::DoNotOptimize(circuit::draw_round(s, circuit::Target::Player, circuit::gating::player_hit, rng));
  }
}
BENCHMARK(BM_DrawRound);

void BM_MonteCarloQbs(benchmark::State& state) {
  for (auto _ : state) {
    circuit::MonteCarloSpec spec{entangled(), circuit::Policy::quantum_basic(), circuit::CollapseMode::Faithful,
                                 11, state.range(0), std::nullopt};
    benchmark::DoNotOptimize(circuit::monte_carlo(spec));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_MonteCarloQbs)->Arg(1 << 14)->Unit(benchmark::kMillisecond);

}  // namespace
