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

#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "snackjack/oracle.hpp"
#include "snackjack/qsim.hpp"
#include "snackjack/rng.hpp"
#include "snackjack/rules.hpp"
#include "snackjack/strategy.hpp"

namespace snackjack::circuit {

using qsim::BasisState;
using qsim::SparseState;

enum class Target : std::uint8_t { Player, Dealer };

/// Faithful keeps the strategy qubits coherent until the end of the hand;
/// EarlyCollapse measures them right after the entangling layer and plays
/// the rest of the hand classically.
enum class CollapseMode : std::uint8_t { Faithful, EarlyCollapse };

using StrategyChoice = std::variant<StrategyOp, qsim::Matrix2>;

/// "I".."Z", or "U" for a custom unitary.
std::string describe(const StrategyChoice& s);

struct GameConfig {
  GameParams params;
  StrategyChoice strategy = StrategyOp::I;
  CollapseMode mode = CollapseMode::Faithful;
  std::uint64_t seed = 0;
};

struct GameRecord {
  int initial_class = 0;
  Deal deal;
  std::vector<int> control_outcomes;  // every measured control value, in order
  int retries = 0;
  int strategy_outcome = 0;  // 2 * player bit + dealer bit
  DeckMask player_final;
  DeckMask dealer_final;
  int payoff = 0;

  friend bool operator==(const GameRecord&, const GameRecord&) = default;
};

/// Selects the basis branches obliged to receive a card in a draw round.
using Gating = std::function<bool(BasisState)>;

namespace gating {
/// Player strategy bit is |1> and the player still holds two cards.
bool player_hit(BasisState b);
/// Dealer holds only the upcard.
bool dealer_hole(BasisState b);
/// Dealer strategy bit is |1>, hole card turned, total below 6.
bool dealer_hit(BasisState b);
}  // namespace gating

/// Called after every stage with a short stage name.
using Observer = std::function<void(std::string_view stage, const SparseState& state)>;

inline constexpr int kRetryBound = 64;

struct InitialDeal {
  Deal deal;
  DeckMask deck;
};

/// Two player cards and the dealer upcard, uniformly from a full deck.
InitialDeal deal_initial(Rng& rng);
/// A uniformly chosen concrete deal of the given row.
Deal deal_from_row(int row, Rng& rng);

/// Deck, hands and strategy bits |0>|1>; copy and control zeroed.
BasisState encode(const Deal& deal);

/// Deck, both hands and the deck copy account for each slot consistently.
bool conserves_cards(BasisState b);

/// Resets the control register from its (common) classical value to |000>
/// and applies H to each qubit. Throws InternalError if the control is not
/// classical across the support.
void prepare_control(SparseState& state);

/// Transversal CNOT deck -> deck copy. Throws InternalError if any copy bit
/// is already set.
void copy_deck(SparseState& state);

/// Eight predicated swaps, slot i swapping deck bit i with the target hand's
/// bit i where control == i, copy bit i is set and `gate` holds. The gate is
/// read on the pre-swap view of slot i, which keeps each swap an involution.
void hit_operator(SparseState& state, Target target, const Gating& gate);

/// Uncomputes the deck copy after the control is measured. Returns whether
/// any branch drew a card this round.
bool release_copy(SparseState& state);

struct DrawResult {
  std::optional<CardSlot> slot;  // nullopt: no branch was gated
  int retries = 0;
  std::vector<int> outcomes;
};

/// One draw: prepare control, copy deck, Hit, measure control; repeated
/// while no gated branch received a card. Throws InternalError after
/// kRetryBound consecutive retries or when a gated branch has an empty deck.
DrawResult draw_round(SparseState& state, Target target, const Gating& gate, Rng& rng,
                      const Observer& observer = {});

/// Hole-card rounds for every branch still missing one, then hit rounds
/// while any branch runs the dealer policy below 6.
void dealer_phase(SparseState& state, Rng& rng, GameRecord& record, const Observer& observer = {});

GameRecord play_dealt(const GameConfig& config, const Deal& deal, Rng& rng, const Observer& observer = {});
GameRecord play_hand(const GameConfig& config, Rng& rng, const Observer& observer = {});
/// play_hand with a fresh stream seeded from config.seed.
GameRecord replay(const GameConfig& config);

/// How a Monte Carlo run picks the strategy for each dealt row.
struct Policy {
  enum class Kind : std::uint8_t { Fixed, ClassicalBasic, QuantumBasic };
  Kind kind = Kind::Fixed;
  StrategyChoice fixed = StrategyOp::I;

  static Policy fixed_strategy(StrategyChoice s) { return {Kind::Fixed, s}; }
  static Policy classical_basic() { return {Kind::ClassicalBasic, StrategyOp::I}; }
  static Policy quantum_basic() { return {Kind::QuantumBasic, StrategyOp::I}; }

  /// Basic-strategy policies take the first member of the argmax set.
  StrategyChoice choose(int row, const GameParams& p) const;
};

struct PayoffStats {
  std::array<std::int64_t, 3> counts{};  // payoffs -1, 0, +1

  void add(int payoff) { ++counts[static_cast<std::size_t>(payoff + 1)]; }
  void merge(const PayoffStats& o) {
    for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += o.counts[i];
  }
  std::int64_t n() const { return counts[0] + counts[1] + counts[2]; }
  double mean() const;
  double std_error() const;
};

struct MonteCarloSpec {
  GameParams params;
  Policy policy;
  CollapseMode mode = CollapseMode::Faithful;
  std::uint64_t seed = 0;
  std::int64_t hands = 0;
  std::optional<int> row;  // restrict dealing to one initial class
};

struct MonteCarloResult {
  PayoffStats overall;
  std::array<PayoffStats, 16> per_row;
  std::int64_t retries = 0;
  std::int64_t draws = 0;  // control measurements
};

/// Hands are split into fixed-size batches with streams derived from the
/// master seed, so results do not depend on the worker count.
MonteCarloResult monte_carlo(const MonteCarloSpec& spec);

inline constexpr std::int64_t kBatchSize = 8192;

}  // namespace snackjack::circuit
