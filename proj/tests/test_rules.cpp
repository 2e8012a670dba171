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

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "snackjack/errors.hpp"
#include "snackjack/rules.hpp"

namespace snackjack {
namespace {

// Slot helpers: first/second ace, deuce, trey.
constexpr CardSlot A1{0}, A2{1}, D1{2}, D2{3}, T1{4}, T2{5}, T3{6}, T4{7};

Hand hand(std::initializer_list<CardSlot> cards) { return Hand{std::vector<CardSlot>(cards)}; }

TEST(CardSlot, FixedRankMap) {
  EXPECT_EQ(A1.rank(), Rank::Ace);
  EXPECT_EQ(A2.rank(), Rank::Ace);
  EXPECT_EQ(D1.rank(), Rank::Two);
  EXPECT_EQ(D2.rank(), Rank::Two);
  for (CardSlot t : {T1, T2, T3, T4}) EXPECT_EQ(t.rank(), Rank::Three);
}

TEST(HandValue, AceThreeIsSoftNatural) {
  const HandValue v = hand_value(hand({A1, T2}));
  EXPECT_EQ(v.total, 7);
  EXPECT_TRUE(v.soft);
  EXPECT_TRUE(v.natural);
  EXPECT_FALSE(v.bust);
}

TEST(HandValue, TwoAcesCountOneHigh) {
  const HandValue v = hand_value(hand({A1, A2}));
  EXPECT_EQ(v.total, 5);
  EXPECT_TRUE(v.soft);
  EXPECT_FALSE(v.natural);
}

TEST(HandValue, HardSevenIsNotNatural) {
  const HandValue v = hand_value(hand({D1, D2, T1}));
  EXPECT_EQ(v.total, 7);
  EXPECT_FALSE(v.soft);
  EXPECT_FALSE(v.natural);
}

TEST(HandValue, EightBusts) {
  const HandValue v = hand_value(hand({T1, T2, D1}));
  EXPECT_EQ(v.total, 8);
  EXPECT_TRUE(v.bust);
}

TEST(HandValue, ThreeCardAceThreeIsNotNatural) {
  const HandValue v = hand_value(hand({A1, D1, T1}));
  EXPECT_EQ(v.total, 6);
  EXPECT_FALSE(v.soft);  // 4 + 2 + 3 = 9 would bust
  EXPECT_FALSE(v.natural);
}

TEST(HandValue, DuplicateSlotIsInvalid) {
  EXPECT_THROW(hand_value(hand({T1, T1})), InvalidHand);
}

TEST(HandValue, EmptyHand) {
  const HandValue v = hand_value(Hand{});
  EXPECT_EQ(v.total, 0);
  EXPECT_FALSE(v.bust);
}

TEST(DealerPolicy, StandsOnSoftSix) { EXPECT_FALSE(dealer_must_hit(hand({A1, D1}))); }
TEST(DealerPolicy, HitsFour) { EXPECT_TRUE(dealer_must_hit(hand({D1, D2}))); }
TEST(DealerPolicy, StandsOnSix) { EXPECT_FALSE(dealer_must_hit(hand({T1, T2}))); }

TEST(Settle, PlayerBustLosesEvenAgainstDealerBust) {
  EXPECT_EQ(settle(hand({T1, T2, D1}), hand({T3, T4, D2})).payoff, -1);
}

TEST(Settle, BothNaturalsPush) { EXPECT_EQ(settle(hand({A1, T1}), hand({A2, T2})).payoff, 0); }

TEST(Settle, NaturalBeatsHardSeven) {
  EXPECT_EQ(settle(hand({A1, T1}), hand({T2, D1, D2})).payoff, +1);
  EXPECT_EQ(settle(hand({T2, D1, D2}), hand({A1, T1})).payoff, -1);
}

TEST(Settle, EqualTotalsPush) { EXPECT_EQ(settle(hand({T1, T2}), hand({T3, T4})).payoff, 0); }

TEST(Settle, DealerBustPaysStandingPlayer) {
  EXPECT_EQ(settle(hand({D1, D2}), hand({T1, T2, T3})).payoff, +1);
}

TEST(Settle, SharedSlotRejected) { EXPECT_THROW(settle(hand({T1, T2}), hand({T2, D1})), InvalidHand); }

TEST(Settle, ZeroSum) {
  const Settlement s = settle(hand({T1, D1}), hand({T2, T3}));
  EXPECT_EQ(s.payoff + s.dealer_payoff(), 0);
}

TEST(Classify, PaperRowExamples) {
  EXPECT_EQ(classify_initial(hand({A1, A2}), D1).row, 1);
  EXPECT_EQ(classify_initial(hand({D1, T1}), T2).row, 16);
  EXPECT_EQ(classify_initial(hand({A1, T1}), A2).row, 11);
}

TEST(Classify, CasesMatchTable) {
  constexpr std::array<int, 16> kCases{2, 4, 2, 4, 12, 12, 12, 4, 4, 16, 8, 16, 24, 16, 8, 24};
  int total = 0;
  for (const InitialStateClass& cls : initial_classes()) {
    EXPECT_EQ(cls.cases, kCases[static_cast<std::size_t>(cls.row - 1)]) << "row " << cls.row;
    EXPECT_EQ(static_cast<int>(class_members(cls.row).size()), cls.cases);
    total += cls.cases;
  }
  EXPECT_EQ(total, 168);
}

TEST(Classify, RejectsMalformedDeals) {
  EXPECT_THROW(classify_initial(hand({A1}), D1), InvalidHand);
  EXPECT_THROW(classify_initial(hand({A1, D1}), D1), InvalidHand);
  EXPECT_THROW(initial_class(17), ClassificationError);
}

// Every one of the 8*7*6/2 unordered deals lands in some row.
TEST(Classify, EveryPhysicalDealIsCovered) {
  int seen = 0;
  for (int a = 0; a < 8; ++a)
    for (int b = a + 1; b < 8; ++b)
      for (int u = 0; u < 8; ++u) {
        if (u == a || u == b) continue;
        EXPECT_NO_THROW(classify_initial(hand({CardSlot(a), CardSlot(b)}), CardSlot(u)));
        ++seen;
      }
  EXPECT_EQ(seen, 168);
}

// Property: valuation ignores card order, and a busted hand never has to hit.
TEST(RulesProperties, PermutationInvarianceAndBustStands) {
  std::mt19937_64 rng(20261014);
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<CardSlot> slots;
    for (int i = 0; i < 8; ++i) slots.emplace_back(i);
    std::shuffle(slots.begin(), slots.end(), rng);
    const auto n = static_cast<std::size_t>(1 + rng() % 5);
    Hand h{std::vector<CardSlot>(slots.begin(), slots.begin() + static_cast<long>(n))};
    const HandValue v = hand_value(h);
    std::shuffle(h.cards.begin(), h.cards.end(), rng);
    const HandValue w = hand_value(h);
    EXPECT_EQ(v.total, w.total);
    EXPECT_EQ(v.soft, w.soft);
    EXPECT_EQ(v.natural, w.natural);
    EXPECT_EQ(v.bust, v.total > 7);
    if (v.bust) EXPECT_FALSE(dealer_must_hit(h));
    if (v.natural) EXPECT_EQ(v.total, 7);

    Hand other{std::vector<CardSlot>(slots.begin() + static_cast<long>(n), slots.end())};
    if (v.bust && !other.cards.empty()) EXPECT_EQ(settle(h, other).payoff, -1);
  }
}

}  // namespace
}  // namespace snackjack
