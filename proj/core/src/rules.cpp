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

#include "snackjack/rules.hpp"

#include <algorithm>
#include <fmt/format.h>

#include "snackjack/errors.hpp"

namespace snackjack {

namespace {

constexpr std::uint8_t kAceBits = 0b0000'0011;
constexpr std::uint8_t kTwoBits = 0b0000'1100;
constexpr std::uint8_t kThreeBits = 0b1111'0000;

constexpr std::array<int, 3> rank_counts(DeckMask m) {
  return {std::popcount(static_cast<std::uint8_t>(m.bits() & kAceBits)),
          std::popcount(static_cast<std::uint8_t>(m.bits() & kTwoBits)),
          std::popcount(static_cast<std::uint8_t>(m.bits() & kThreeBits))};
}

struct RowKey {
  std::array<int, 3> ranks;
  Rank up;
};

constexpr std::array<RowKey, 16> kRowKeys{{
    {{2, 0, 0}, Rank::Two},   {{2, 0, 0}, Rank::Three},
    {{0, 2, 0}, Rank::Ace},   {{0, 2, 0}, Rank::Three},
    {{0, 0, 2}, Rank::Ace},   {{0, 0, 2}, Rank::Two},   {{0, 0, 2}, Rank::Three},
    {{1, 1, 0}, Rank::Ace},   {{1, 1, 0}, Rank::Two},   {{1, 1, 0}, Rank::Three},
    {{1, 0, 1}, Rank::Ace},   {{1, 0, 1}, Rank::Two},   {{1, 0, 1}, Rank::Three},
    {{0, 1, 1}, Rank::Ace},   {{0, 1, 1}, Rank::Two},   {{0, 1, 1}, Rank::Three},
}};

int find_row(const std::array<int, 3>& ranks, Rank up) {
  for (std::size_t i = 0; i < kRowKeys.size(); ++i) {
    if (kRowKeys[i].ranks == ranks && kRowKeys[i].up == up) return static_cast<int>(i) + 1;
  }
  return 0;
}

std::array<InitialStateClass, 16> build_classes() {
  std::array<InitialStateClass, 16> out{};
  for (std::size_t i = 0; i < kRowKeys.size(); ++i) {
    out[i].row = static_cast<int>(i) + 1;
    out[i].player_ranks = kRowKeys[i].ranks;
    out[i].up = kRowKeys[i].up;
  }
  for (int a = 0; a < kDeckSize; ++a) {
    for (int b = a + 1; b < kDeckSize; ++b) {
      for (int u = 0; u < kDeckSize; ++u) {
        if (u == a || u == b) continue;
        DeckMask pair;
        pair.insert(CardSlot(a));
        pair.insert(CardSlot(b));
        const int row = find_row(rank_counts(pair), CardSlot(u).rank());
        ++out[static_cast<std::size_t>(row - 1)].cases;
      }
    }
  }
  return out;
}

}  // namespace

std::vector<CardSlot> DeckMask::slots() const {
  std::vector<CardSlot> out;
  for (int i = 0; i < kDeckSize; ++i) {
    if (contains(CardSlot(i))) out.emplace_back(i);
  }
  return out;
}

DeckMask Hand::mask() const {
  DeckMask m;
  for (CardSlot s : cards) {
    if (s.index() < 0 || s.index() >= kDeckSize) {
      throw InvalidHand(fmt::format("card slot {} out of range", s.index()));
    }
    if (m.contains(s)) throw InvalidHand(fmt::format("card slot {} appears twice", s.index()));
    m.insert(s);
  }
  return m;
}

DeckMask Deal::player_mask() const {
  return Hand{{player[0], player[1]}}.mask();
}

DeckMask Deal::remaining() const {
  const DeckMask p = player_mask();
  if (p.contains(up)) throw InvalidHand("upcard duplicates a player card");
  return DeckMask(static_cast<std::uint8_t>(~(p.bits() | (1u << up.index()))));
}

HandValue hand_value(DeckMask cards) {
  const auto counts = rank_counts(cards);
  HandValue v;
  v.total = counts[0] + 2 * counts[1] + 3 * counts[2];
  if (counts[0] > 0 && v.total + 3 <= kTarget) {
    v.total += 3;
    v.soft = true;
  }
  v.natural = cards.count() == 2 && counts[0] == 1 && counts[2] == 1;
  v.bust = v.total > kTarget;
  return v;
}

HandValue hand_value(const Hand& hand) { return hand_value(hand.mask()); }

bool dealer_must_hit(DeckMask cards) {
  const HandValue v = hand_value(cards);
  return !v.bust && v.total < kDealerStand;
}

bool dealer_must_hit(const Hand& hand) { return dealer_must_hit(hand.mask()); }

Settlement settle(DeckMask player, DeckMask dealer) {
  const HandValue p = hand_value(player);
  const HandValue d = hand_value(dealer);
  if (p.bust) return {-1};
  if (d.bust) return {+1};
  if (p.natural != d.natural) return {p.natural ? +1 : -1};
  if (p.total == d.total) return {0};
  return {p.total > d.total ? +1 : -1};
}

Settlement settle(const Hand& player, const Hand& dealer) {
  const DeckMask p = player.mask();
  const DeckMask d = dealer.mask();
  if ((p.bits() & d.bits()) != 0) throw InvalidHand("player and dealer share a card slot");
  return settle(p, d);
}

std::span<const InitialStateClass, 16> initial_classes() {
  static const std::array<InitialStateClass, 16> classes = build_classes();
  return classes;
}

const InitialStateClass& initial_class(int row) {
  if (row < 1 || row > 16) throw ClassificationError(fmt::format("no initial class row {}", row));
  return initial_classes()[static_cast<std::size_t>(row - 1)];
}

const InitialStateClass& classify_initial(const Hand& player, CardSlot upcard) {
  if (player.cards.size() != 2) throw InvalidHand("initial player hand must hold exactly 2 cards");
  const DeckMask p = player.mask();
  if (upcard.index() < 0 || upcard.index() >= kDeckSize) throw InvalidHand("upcard slot out of range");
  if (p.contains(upcard)) throw InvalidHand("upcard duplicates a player card");
  const int row = find_row(rank_counts(p), upcard.rank());
  if (row == 0) {
    throw ClassificationError(
        fmt::format("rank combination {} up {} is not an initial class",
                    describe_ranks(rank_counts(p)), rank_symbol(upcard.rank())));
  }
  return initial_class(row);
}

const InitialStateClass& classify_initial(const Deal& deal) {
  return classify_initial(Hand{{deal.player[0], deal.player[1]}}, deal.up);
}

std::vector<Deal> class_members(int row) {
  const InitialStateClass& cls = initial_class(row);
  std::vector<Deal> out;
  for (int a = 0; a < kDeckSize; ++a) {
    for (int b = a + 1; b < kDeckSize; ++b) {
      for (int u = 0; u < kDeckSize; ++u) {
        if (u == a || u == b) continue;
        Deal d{{CardSlot(a), CardSlot(b)}, CardSlot(u)};
        if (classify_initial(d).row == cls.row) out.push_back(d);
      }
    }
  }
  return out;
}

char rank_symbol(Rank r) {
  switch (r) {
    case Rank::Ace: return 'A';
    case Rank::Two: return '2';
    case Rank::Three: return '3';
  }
  return '?';
}

std::string describe_ranks(const std::array<int, 3>& counts) {
  return fmt::format("({},{},{})", counts[0], counts[1], counts[2]);
}

}  // namespace snackjack
