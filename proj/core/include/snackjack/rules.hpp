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
#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace snackjack {

enum class Rank : std::uint8_t { Ace, Two, Three };

inline constexpr int kDeckSize = 8;
inline constexpr int kTarget = 7;
inline constexpr int kDealerStand = 6;

/// One of the eight physical cards A A 2 2 3 3 3 3, identified by position.
class CardSlot {
 public:
  constexpr CardSlot() = default;
  explicit constexpr CardSlot(int index) : index_(static_cast<std::uint8_t>(index)) {}

  constexpr int index() const { return index_; }
  constexpr Rank rank() const {
    return index_ < 2 ? Rank::Ace : index_ < 4 ? Rank::Two : Rank::Three;
  }
  /// Minimum point value (ace counted low).
  constexpr int points() const { return static_cast<int>(rank()) + 1; }

  friend constexpr bool operator==(CardSlot, CardSlot) = default;
  friend constexpr auto operator<=>(CardSlot, CardSlot) = default;

 private:
  std::uint8_t index_ = 0;
};

/// Presence flags for the eight slots; bit i set means slot i is here.
class DeckMask {
 public:
  constexpr DeckMask() = default;
  explicit constexpr DeckMask(std::uint8_t bits) : bits_(bits) {}
  static constexpr DeckMask full() { return DeckMask(0xFF); }

  constexpr std::uint8_t bits() const { return bits_; }
  constexpr bool contains(CardSlot s) const { return (bits_ >> s.index()) & 1u; }
  constexpr int count() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr void insert(CardSlot s) { bits_ |= static_cast<std::uint8_t>(1u << s.index()); }
  constexpr void remove(CardSlot s) { bits_ &= static_cast<std::uint8_t>(~(1u << s.index())); }
  std::vector<CardSlot> slots() const;

  friend constexpr bool operator==(DeckMask, DeckMask) = default;

 private:
  std::uint8_t bits_ = 0;
};

/// Cards held by one participant, in the order received.
struct Hand {
  std::vector<CardSlot> cards;

  /// Throws InvalidHand on a repeated slot.
  DeckMask mask() const;
};

struct HandValue {
  int total = 0;
  bool soft = false;
  bool natural = false;
  bool bust = false;
};

/// Unit-bet result from the player's side; the dealer receives -payoff.
struct Settlement {
  int payoff = 0;
  constexpr int dealer_payoff() const { return -payoff; }
};

/// Player pair plus dealer upcard.
struct Deal {
  std::array<CardSlot, 2> player;
  CardSlot up;

  DeckMask player_mask() const;
  /// Slots still in the deck after this deal.
  DeckMask remaining() const;

  friend bool operator==(const Deal&, const Deal&) = default;
};

/// One row of the sixteen-row initial state table.
struct InitialStateClass {
  int row = 0;                       // 1..16
  std::array<int, 3> player_ranks{};  // counts of (aces, twos, threes)
  Rank up = Rank::Ace;
  int cases = 0;  // unordered distinguishable player pairs x upcards
};

HandValue hand_value(const Hand& hand);
/// Valuation on a presence mask; a two-card {A, 3} mask counts as natural.
HandValue hand_value(DeckMask cards);

bool dealer_must_hit(const Hand& hand);
bool dealer_must_hit(DeckMask cards);

Settlement settle(const Hand& player, const Hand& dealer);
Settlement settle(DeckMask player, DeckMask dealer);

/// The canonical table order: player pair (AA, 22, 33, A2, A3, 23) then
/// upcard rank ascending, restricted to reachable combinations.
std::span<const InitialStateClass, 16> initial_classes();
const InitialStateClass& initial_class(int row);

const InitialStateClass& classify_initial(const Hand& player, CardSlot upcard);
const InitialStateClass& classify_initial(const Deal& deal);

/// Every concrete deal belonging to a row, in slot order.
std::vector<Deal> class_members(int row);

char rank_symbol(Rank r);
std::string describe_ranks(const std::array<int, 3>& counts);  // "(2,0,0)"

}  // namespace snackjack
