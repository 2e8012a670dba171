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

#include "snackjack/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <thread>
#include <fmt/format.h>

#include "snackjack/errors.hpp"
#include "snackjack/ewl.hpp"

namespace snackjack::circuit {

namespace L = qsim::layout;

namespace {

constexpr BasisState bit_of(const qsim::Field& f, unsigned i) { return BasisState{1} << f.qubit(i); }

DeckMask field_mask(BasisState b, const qsim::Field& f) {
  return DeckMask(static_cast<std::uint8_t>(f.value(b)));
}

const qsim::Field& hand_field(Target t) { return t == Target::Player ? L::kPlayerHand : L::kDealerHand; }

void notify(const Observer& observer, std::string_view stage, const SparseState& state) {
  if (observer) observer(stage, state);
}

qsim::Matrix2 strategy_unitary(const StrategyChoice& s) {
  if (const auto* op = std::get_if<StrategyOp>(&s)) return ewl::strategy_matrix(*op);
  return std::get<qsim::Matrix2>(s);
}

void apply_entangled_strategy(SparseState& state, const GameConfig& config) {
  const ewl::Entangler e = ewl::build_entangler(config.params);
  const unsigned p = L::kPlayerStrategy.qubit(0);
  const unsigned d = L::kDealerStrategy.qubit(0);
  state.apply(qsim::TwoQubitGate{e.j, p, d});
  state.apply(qsim::OneQubitGate{strategy_unitary(config.strategy), p});
  state.apply(qsim::TwoQubitGate{e.j_dagger, p, d});
}

CardSlot draw_uniform(DeckMask& deck, Rng& rng) {
  if (deck.empty()) throw InternalError("deck exhausted");
  const std::vector<CardSlot> slots = deck.slots();
  const CardSlot s = slots[static_cast<std::size_t>(uniform_index(rng, static_cast<int>(slots.size())))];
  deck.remove(s);
  return s;
}

// Deferred-measurement route: strategy bits are already classical.
void finish_classically(GameRecord& record, int player_bit, int dealer_bit, Rng& rng) {
  DeckMask deck = record.deal.remaining();
  DeckMask player = record.deal.player_mask();
  DeckMask dealer;
  dealer.insert(record.deal.up);
  if (player_bit) player.insert(draw_uniform(deck, rng));
  dealer.insert(draw_uniform(deck, rng));
  if (dealer_bit) {
    while (dealer_must_hit(dealer)) dealer.insert(draw_uniform(deck, rng));
  }
  record.player_final = player;
  record.dealer_final = dealer;
}

}  // namespace

std::string describe(const StrategyChoice& s) {
  if (const auto* op = std::get_if<StrategyOp>(&s)) return std::string(1, strategy_tag(*op));
  return "U";
}

namespace gating {

bool player_hit(BasisState b) {
  return L::kPlayerStrategy.value(b) == 1 && field_mask(b, L::kPlayerHand).count() == 2;
}

bool dealer_hole(BasisState b) { return field_mask(b, L::kDealerHand).count() == 1; }

bool dealer_hit(BasisState b) {
  const DeckMask hand = field_mask(b, L::kDealerHand);
  return L::kDealerStrategy.value(b) == 1 && hand.count() >= 2 && dealer_must_hit(hand);
}

}  // namespace gating

InitialDeal deal_initial(Rng& rng) {
  std::array<int, kDeckSize> order{0, 1, 2, 3, 4, 5, 6, 7};
  for (int k = 0; k < 3; ++k) {
    const int j = k + uniform_index(rng, kDeckSize - k);
    std::swap(order[static_cast<std::size_t>(k)], order[static_cast<std::size_t>(j)]);
  }
  const int a = std::min(order[0], order[1]);
  const int b = std::max(order[0], order[1]);
  Deal deal{{CardSlot(a), CardSlot(b)}, CardSlot(order[2])};
  return {deal, deal.remaining()};
}

Deal deal_from_row(int row, Rng& rng) {
  const std::vector<Deal> members = class_members(row);
  return members[static_cast<std::size_t>(uniform_index(rng, static_cast<int>(members.size())))];
}

BasisState encode(const Deal& deal) {
  BasisState b = 0;
  b = L::kDeck.with(b, deal.remaining().bits());
  b = L::kPlayerHand.with(b, deal.player_mask().bits());
  b = L::kDealerHand.with(b, 1u << deal.up.index());
  b = L::kPlayerStrategy.with(b, 0);
  b = L::kDealerStrategy.with(b, 1);
  return b;
}

bool conserves_cards(BasisState b) {
  const unsigned deck = L::kDeck.value(b);
  const unsigned player = L::kPlayerHand.value(b);
  const unsigned dealer = L::kDealerHand.value(b);
  const unsigned copy = L::kDeckCopy.value(b);
  const bool disjoint = (deck & player) == 0 && (deck & dealer) == 0 && (player & dealer) == 0;
  // The copy mirrors the deck except for a slot that just moved into a hand.
  const unsigned stray = copy & ~deck;
  const bool copy_ok = stray == 0 || (std::popcount(stray) == 1 && (stray & (player | dealer)) != 0);
  return disjoint && (deck | player | dealer) == 0xFFu && copy_ok;
}

void prepare_control(SparseState& state) {
  const auto value = state.common_value(L::kControl);
  if (!value) throw InternalError("control register entangled with an unresolved draw");
  for (unsigned i = 0; i < L::kControl.width; ++i) {
    if ((*value >> i) & 1u) state.x(L::kControl.qubit(i));
  }
  for (unsigned i = 0; i < L::kControl.width; ++i) state.h(L::kControl.qubit(i));
}

void copy_deck(SparseState& state) {
  if (state.common_value(L::kDeckCopy) != 0u) throw InternalError("deck copy register is not zeroed");
  for (unsigned i = 0; i < L::kDeck.width; ++i) {
    const BasisState control = bit_of(L::kDeck, i);
    state.apply(qsim::PredicatedPermutation{[control](BasisState b) { return (b & control) != 0; },
                                            {},
                                            bit_of(L::kDeckCopy, i)});
  }
}

void hit_operator(SparseState& state, Target target, const Gating& gate) {
  const qsim::Field& hand = hand_field(target);
  for (unsigned i = 0; i < L::kDeck.width; ++i) {
    const BasisState deck_bit = bit_of(L::kDeck, i);
    const BasisState copy_bit = bit_of(L::kDeckCopy, i);
    const BasisState hand_bit = bit_of(hand, i);
    auto predicate = [=, &gate](BasisState b) {
      if (L::kControl.value(b) != i || (b & copy_bit) == 0) return false;
      return gate((b | deck_bit) & ~hand_bit);
    };
    state.apply(qsim::PredicatedPermutation{predicate, {{L::kDeck.qubit(i), hand.qubit(i)}}, 0});
  }
}

bool release_copy(SparseState& state) {
  for (unsigned i = 0; i < L::kDeck.width; ++i) {
    const BasisState control = bit_of(L::kDeck, i);
    state.apply(qsim::PredicatedPermutation{[control](BasisState b) { return (b & control) != 0; },
                                            {},
                                            bit_of(L::kDeckCopy, i)});
  }
  // What is left is copy bit c on exactly the branches that swapped slot c
  // this round. It records which round the card moved in and cannot be
  // uncomputed from the hands, so the register is discarded for a fresh one.
  bool drew = false;
  for (const auto& e : state.entries()) drew = drew || L::kDeckCopy.value(e.basis) != 0;
  state.release_field(L::kDeckCopy);
  return drew;
}

DrawResult draw_round(SparseState& state, Target target, const Gating& gate, Rng& rng,
                      const Observer& observer) {
  DrawResult result;
  bool any_gated = false;
  for (const auto& e : state.entries()) {
    if (!gate(e.basis)) continue;
    any_gated = true;
    if (L::kDeck.value(e.basis) == 0) throw InternalError("gated branch has an empty deck");
  }
  if (!any_gated) return result;

  for (;;) {
    prepare_control(state);
    copy_deck(state);
    hit_operator(state, target, gate);
    notify(observer, "hit", state);
    const unsigned c = qsim::measure(state, L::kControl, rng);
    result.outcomes.push_back(static_cast<int>(c));
    const bool drew = release_copy(state);
    notify(observer, "measure_control", state);
    if (drew) {
      result.slot = CardSlot(static_cast<int>(c));
      return result;
    }
    if (++result.retries > kRetryBound) {
      throw InternalError(fmt::format("draw retried more than {} times", kRetryBound));
    }
  }
}

void dealer_phase(SparseState& state, Rng& rng, GameRecord& record, const Observer& observer) {
  const auto run = [&](const Gating& gate) {
    // Each accepted round moves at least one card, so the deck bounds the loop.
    for (int rounds = 0; rounds <= kDeckSize; ++rounds) {
      DrawResult r = draw_round(state, Target::Dealer, gate, rng, observer);
      if (!r.slot) return;
      record.retries += r.retries;
      record.control_outcomes.insert(record.control_outcomes.end(), r.outcomes.begin(), r.outcomes.end());
    }
    throw InternalError("dealer phase did not terminate");
  };
  run(gating::dealer_hole);
  run(gating::dealer_hit);
}

GameRecord play_dealt(const GameConfig& config, const Deal& deal, Rng& rng, const Observer& observer) {
  if (const auto* m = std::get_if<qsim::Matrix2>(&config.strategy)) {
    if (qsim::matrices::unitarity_defect(*m) > SparseState::kUnitarityTolerance) {
      throw ConfigurationError("player strategy is not unitary");
    }
  }
  GameRecord record;
  record.deal = deal;
  record.initial_class = classify_initial(deal).row;

  SparseState state(encode(deal));
  notify(observer, "deal", state);
  apply_entangled_strategy(state, config);
  notify(observer, "entangle", state);

  if (config.mode == CollapseMode::EarlyCollapse) {
    const int p = static_cast<int>(qsim::measure(state, L::kPlayerStrategy, rng));
    const int d = static_cast<int>(qsim::measure(state, L::kDealerStrategy, rng));
    record.strategy_outcome = 2 * p + d;
    finish_classically(record, p, d, rng);
    record.payoff = settle(record.player_final, record.dealer_final).payoff;
    return record;
  }

  for (int rounds = 0;; ++rounds) {
    if (rounds > 1) throw InternalError("player drew more than once");
    DrawResult r = draw_round(state, Target::Player, gating::player_hit, rng, observer);
    if (!r.slot) break;
    record.retries += r.retries;
    record.control_outcomes.insert(record.control_outcomes.end(), r.outcomes.begin(), r.outcomes.end());
  }
  dealer_phase(state, rng, record, observer);

  const int p = static_cast<int>(qsim::measure(state, L::kPlayerStrategy, rng));
  const int d = static_cast<int>(qsim::measure(state, L::kDealerStrategy, rng));
  notify(observer, "measure_strategy", state);
  if (state.support_size() != 1) {
    throw InternalError(fmt::format("{} basis states survive the final measurement", state.support_size()));
  }
  const BasisState b = state.entries().front().basis;
  record.strategy_outcome = 2 * p + d;
  record.player_final = field_mask(b, L::kPlayerHand);
  record.dealer_final = field_mask(b, L::kDealerHand);
  record.payoff = settle(record.player_final, record.dealer_final).payoff;
  return record;
}

GameRecord play_hand(const GameConfig& config, Rng& rng, const Observer& observer) {
  const InitialDeal d = deal_initial(rng);
  return play_dealt(config, d.deal, rng, observer);
}

GameRecord replay(const GameConfig& config) {
  Rng rng(config.seed);
  return play_hand(config, rng);
}

StrategyChoice Policy::choose(int row, const GameParams& p) const {
  switch (kind) {
    case Kind::Fixed: return fixed;
    case Kind::ClassicalBasic: return best_strategies(row, p, StrategyMode::Classical).first();
    case Kind::QuantumBasic: return best_strategies(row, p, StrategyMode::Quantum).first();
  }
  return fixed;
}

double PayoffStats::mean() const {
  const std::int64_t total = n();
  if (total == 0) return 0.0;
  return static_cast<double>(counts[2] - counts[0]) / static_cast<double>(total);
}

double PayoffStats::std_error() const {
  const std::int64_t total = n();
  if (total < 2) return 0.0;
  const double m = mean();
  const double second = static_cast<double>(counts[0] + counts[2]) / static_cast<double>(total);
  const double variance = (second - m * m) * static_cast<double>(total) / static_cast<double>(total - 1);
  return std::sqrt(std::max(variance, 0.0) / static_cast<double>(total));
}

MonteCarloResult monte_carlo(const MonteCarloSpec& spec) {
  if (spec.hands < 1) throw ConfigurationError("Monte Carlo needs at least one hand");
  if (spec.row) (void)initial_class(*spec.row);

  std::array<StrategyChoice, 16> choices;
  for (int row = 1; row <= 16; ++row) {
    choices[static_cast<std::size_t>(row - 1)] = spec.policy.choose(row, spec.params);
  }
  std::vector<Deal> members;
  if (spec.row) members = class_members(*spec.row);

  const std::int64_t batches = (spec.hands + kBatchSize - 1) / kBatchSize;
  std::vector<MonteCarloResult> partial(static_cast<std::size_t>(batches));

  const auto run_batch = [&](std::int64_t b) {
    Rng rng = derive_stream(spec.seed, static_cast<std::uint64_t>(b));
    MonteCarloResult& out = partial[static_cast<std::size_t>(b)];
    const std::int64_t begin = b * kBatchSize;
    const std::int64_t end = std::min(spec.hands, begin + kBatchSize);
    GameConfig config{spec.params, StrategyOp::I, spec.mode, spec.seed};
    for (std::int64_t h = begin; h < end; ++h) {
      const Deal deal = members.empty()
                            ? deal_initial(rng).deal
                            : members[static_cast<std::size_t>(uniform_index(rng, static_cast<int>(members.size())))];
      const int row = classify_initial(deal).row;
      config.strategy = choices[static_cast<std::size_t>(row - 1)];
      const GameRecord rec = play_dealt(config, deal, rng);
      out.overall.add(rec.payoff);
      out.per_row[static_cast<std::size_t>(row - 1)].add(rec.payoff);
      out.retries += rec.retries;
      out.draws += static_cast<std::int64_t>(rec.control_outcomes.size());
    }
  };

  const unsigned workers =
      static_cast<unsigned>(std::min<std::int64_t>(std::max(1u, std::thread::hardware_concurrency()), batches));
  if (workers <= 1) {
    for (std::int64_t b = 0; b < batches; ++b) run_batch(b);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::int64_t b = w; b < batches; b += workers) run_batch(b);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  MonteCarloResult total;
  for (const MonteCarloResult& r : partial) {
    total.overall.merge(r.overall);
    for (std::size_t i = 0; i < total.per_row.size(); ++i) total.per_row[i].merge(r.per_row[i]);
    total.retries += r.retries;
    total.draws += r.draws;
  }
  return total;
}

}  // namespace snackjack::circuit
