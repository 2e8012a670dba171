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
#include <cmath>
#include <numbers>
#include <random>

#include "snackjack/errors.hpp"
#include "snackjack/interface/reference_values.hpp"
#include "snackjack/oracle.hpp"

namespace snackjack {
namespace {

const GameParams kFull(Angle::pi_eighths(4), Angle::pi_eighths(4));
const GameParams kHalf(Angle::pi_eighths(2), Angle::pi_eighths(4));

Rational R(std::string_view s) { return parse_rational(std::string(s)); }

StrategySet parse_set(std::string_view s) {
  StrategySet out;
  for (char c : s) {
    if (c != ',') out.insert(parse_strategy(std::string_view(&c, 1)));
  }
  return out;
}

const PayoffQuadruple& row_payoffs(int row) { return payoff_table()[static_cast<std::size_t>(row - 1)]; }

TEST(Oracle, ClassicalTableMatchesPublishedRows) {
  for (const auto& ref : reference::kRows) {
    const PayoffQuadruple& q = row_payoffs(ref.row);
    EXPECT_EQ(q.e_std, R(ref.e_std)) << "row " << ref.row;
    EXPECT_EQ(q.e_hit, R(ref.e_hit)) << "row " << ref.row;
    EXPECT_EQ(initial_class(ref.row).cases, ref.cases);
    EXPECT_EQ(describe_ranks(initial_class(ref.row).player_ranks), ref.ranks);
    EXPECT_EQ(rank_symbol(initial_class(ref.row).up), ref.up);
  }
}

TEST(Oracle, EntangledColumnsMatchPublishedRows) {
  for (const auto& ref : reference::kRows) {
    const PayoffQuadruple& q = row_payoffs(ref.row);
    EXPECT_EQ(q.e_00, R(ref.e_00)) << "row " << ref.row;
    EXPECT_EQ(q.e_10, R(ref.e_10)) << "row " << ref.row;
  }
}

TEST(Oracle, SpotQuadruples) {
  EXPECT_EQ(row_payoffs(14), (PayoffQuadruple{R("-4/5"), R("-17/20"), R("-4/5"), R("-17/20")}));
  EXPECT_EQ(row_payoffs(6).e_00, R("3/5"));
  EXPECT_EQ(row_payoffs(6).e_std, R("-1/30"));
  EXPECT_EQ(row_payoffs(1), (PayoffQuadruple{R("1/5"), R("1/5"), R("1/5"), R("2/5")}));
  EXPECT_EQ(row_payoffs(5).e_std, R("-8/15"));
  EXPECT_EQ(row_payoffs(5).e_hit, R("-4/5"));
}

TEST(Oracle, PayoffsStayInUnitInterval) {
  for (const PayoffQuadruple& q : payoff_table()) {
    for (const Rational& v : {q.e_std, q.e_hit, q.e_00, q.e_10}) {
      EXPECT_GE(v, Rational(-1));
      EXPECT_LE(v, Rational(1));
    }
  }
}

// Independent route: walk all 8! orderings of the full deck, deal in order
// (two to the player, one upcard), and play every regime straight off the
// remaining sequence. No class membership lists or per-row enumeration.
TEST(Oracle, BruteForceOverFullDeckOrders) {
  std::array<std::array<std::int64_t, 4>, 16> sums{};
  std::array<std::int64_t, 16> counts{};
  std::array<int, 8> deck{0, 1, 2, 3, 4, 5, 6, 7};
  const auto value = [](const std::vector<int>& cards) {
    int total = 0;
    bool ace = false;
    for (int c : cards) {
      total += c < 2 ? 1 : c < 4 ? 2 : 3;
      ace = ace || c < 2;
    }
    return ace && total + 3 <= 7 ? total + 3 : total;
  };
  const auto natural = [](const std::vector<int>& cards) {
    return cards.size() == 2 && ((cards[0] < 2 && cards[1] >= 4) || (cards[1] < 2 && cards[0] >= 4));
  };
  do {
    Hand p{{CardSlot(deck[0]), CardSlot(deck[1])}};
    const int row = classify_initial(p, CardSlot(deck[2])).row;
    ++counts[static_cast<std::size_t>(row - 1)];
    for (int regime = 0; regime < 4; ++regime) {
      const bool player_hits = regime == 1 || regime == 3;
      const bool dealer_hits = regime <= 1;
      std::size_t next = 3;
      std::vector<int> player{deck[0], deck[1]};
      if (player_hits) player.push_back(deck[next++]);
      std::vector<int> dealer{deck[2], deck[next++]};
      while (dealer_hits && value(dealer) < 6) dealer.push_back(deck[next++]);
      int payoff = 0;
      const int pv = value(player);
      const int dv = value(dealer);
      if (pv > 7) payoff = -1;
      else if (dv > 7) payoff = 1;
      else if (natural(player) && !natural(dealer)) payoff = 1;
      else if (natural(dealer) && !natural(player)) payoff = -1;
      else payoff = (pv > dv) - (pv < dv);
      sums[static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(regime)] += payoff;
    }
  } while (std::next_permutation(deck.begin(), deck.end()));

  for (int row = 1; row <= 16; ++row) {
    const auto i = static_cast<std::size_t>(row - 1);
    const PayoffQuadruple& q = row_payoffs(row);
    EXPECT_EQ(Rational(sums[i][0], counts[i]), q.e_std) << "row " << row;
    EXPECT_EQ(Rational(sums[i][1], counts[i]), q.e_hit) << "row " << row;
    EXPECT_EQ(Rational(sums[i][2], counts[i]), q.e_00) << "row " << row;
    EXPECT_EQ(Rational(sums[i][3], counts[i]), q.e_10) << "row " << row;
    // Ordered deals: 2 orders of the pair times 5! tails per unordered case.
    EXPECT_EQ(counts[i], initial_class(row).cases * 2 * 120);
  }
}

TEST(Oracle, ClassWeights) {
  const auto w = class_weights();
  EXPECT_EQ(w[0], Rational(2, 168));
  EXPECT_EQ(w[12], Rational(24, 168));
  Rational sum = 0;
  for (const Rational& x : w) {
    EXPECT_GT(x, Rational(0));
    sum += x;
  }
  EXPECT_EQ(sum, Rational(1));
}

TEST(Oracle, EwlPayoffsCollapseWithoutEntanglement) {
  for (int k = 0; k <= 4; ++k) {
    const GameParams p(Angle::pi_eighths(0), Angle::pi_eighths(k));
    for (const PayoffQuadruple& q : payoff_table()) {
      const auto v = *ewl_payoffs_exact(q, p);
      EXPECT_EQ(v[0], QuadraticSurd(q.e_std));
      EXPECT_EQ(v[1], QuadraticSurd(q.e_hit));
      EXPECT_EQ(v[2], QuadraticSurd(q.e_hit));
      EXPECT_EQ(v[3], QuadraticSurd(q.e_std));
    }
  }
}

TEST(Oracle, EwlPayoffsAtFullEntanglement) {
  for (const PayoffQuadruple& q : payoff_table()) {
    const auto v = *ewl_payoffs_exact(q, kFull);
    EXPECT_EQ(v[0], QuadraticSurd(q.e_std));
    EXPECT_EQ(v[1], QuadraticSurd(q.e_hit));
    EXPECT_EQ(v[2], QuadraticSurd(q.e_00));
    EXPECT_EQ(v[3], QuadraticSurd(q.e_10));
  }
}

TEST(Oracle, EwlPayoffsAtHalfEntanglement) {
  for (const PayoffQuadruple& q : payoff_table()) {
    const auto v = *ewl_payoffs_exact(q, kHalf);
    EXPECT_EQ(v[2], QuadraticSurd((q.e_hit + q.e_00) / 2));
    EXPECT_EQ(v[3], QuadraticSurd((q.e_std + q.e_10) / 2));
  }
}

TEST(Oracle, FloatingPathAgreesWithClosedForm) {
  const GameParams p(Angle::from_radians(0.7), Angle::from_radians(1.1));
  const double s2g = std::pow(std::sin(0.7), 2), c2g = std::pow(std::cos(0.7), 2);
  const double s2t = std::pow(std::sin(1.1), 2), c2t = std::pow(std::cos(1.1), 2);
  for (const PayoffQuadruple& q : payoff_table()) {
    const auto v = ewl_payoffs(q, p);
    const double es = to_double(q.e_std), eh = to_double(q.e_hit);
    const double e0 = to_double(q.e_00), e1 = to_double(q.e_10);
    EXPECT_NEAR(v[2], s2g * (c2t * es + s2t * e0) + c2g * eh, 1e-14);
    EXPECT_NEAR(v[3], c2g * es + s2g * (c2t * eh + s2t * e1), 1e-14);
  }
}

TEST(Oracle, BasicStrategySets) {
  const auto cbs = basic_strategy(GameParams::classical(), StrategyMode::Classical);
  const auto qbs = basic_strategy(kFull, StrategyMode::Quantum);
  for (const auto& ref : reference::kRows) {
    const auto i = static_cast<std::size_t>(ref.row - 1);
    EXPECT_EQ(cbs[i], parse_set(ref.cbs)) << "row " << ref.row << " got " << cbs[i].to_string();
    EXPECT_EQ(qbs[i], parse_set(ref.qbs)) << "row " << ref.row << " got " << qbs[i].to_string();
  }
  EXPECT_EQ(qbs[4], (StrategySet{StrategyOp::Y}));
  EXPECT_EQ(qbs[7], (StrategySet{StrategyOp::I, StrategyOp::X, StrategyOp::Y, StrategyOp::Z}));
  EXPECT_EQ(cbs[15], (StrategySet{StrategyOp::X}));
}

TEST(Oracle, UnentangledQuantumSetsAliasClassical) {
  const auto cbs = basic_strategy(GameParams::classical(), StrategyMode::Classical);
  const auto q0 = basic_strategy(GameParams::classical(), StrategyMode::Quantum);
  for (std::size_t i = 0; i < 16; ++i) {
    StrategySet expected = cbs[i];
    if (cbs[i].contains(StrategyOp::X)) expected.insert(StrategyOp::Y);
    if (cbs[i].contains(StrategyOp::I)) expected.insert(StrategyOp::Z);
    EXPECT_EQ(q0[i], expected) << "row " << i + 1;
  }
}

TEST(Oracle, OverallExpectations) {
  const Expectation classical = overall_expectation(GameParams::classical(), StrategyMode::Classical);
  ASSERT_TRUE(classical.exact);
  EXPECT_EQ(*classical.exact, QuadraticSurd(R(reference::kClassicalExpectation)));

  const Expectation full = overall_expectation(kFull);
  ASSERT_TRUE(full.exact && full.exact->is_rational());
  EXPECT_EQ(*full.exact, QuadraticSurd(R(reference::kFullEntangledExpectation)));
  EXPECT_DOUBLE_EQ(std::round(full.value * 1000) / 10, reference::kFullEntangledPercent);

  const Expectation half = overall_expectation(kHalf);
  ASSERT_TRUE(half.exact && half.exact->is_rational());
  EXPECT_EQ(*half.exact, QuadraticSurd(R(reference::kHalfEntangledExpectation)));
  EXPECT_DOUBLE_EQ(std::round(half.value * 1000) / 10, reference::kHalfEntangledPercent);
  EXPECT_DOUBLE_EQ(std::round(classical.value * 1000) / 10, reference::kClassicalPercent);
}

// Frozen from the classical column sums: sum(cases * max(E_std, E_hit)) = -2.8.
TEST(Oracle, ClassicalExpectationFromTableSums) {
  Rational acc = 0;
  for (const auto& ref : reference::kRows) acc += ref.cases * std::max(R(ref.e_std), R(ref.e_hit));
  EXPECT_EQ(acc, Rational(-28, 10));
  EXPECT_EQ(acc / 168, Rational(-1, 60));
}

TEST(Oracle, ThetaZeroIsFlatInGamma) {
  const QuadraticSurd classical = *overall_expectation(GameParams::classical(), StrategyMode::Classical).exact;
  for (int k = 0; k <= 4; ++k) {
    const Expectation e = overall_expectation(GameParams(Angle::pi_eighths(k), Angle::pi_eighths(0)));
    ASSERT_TRUE(e.exact);
    EXPECT_EQ(*e.exact, classical) << "gamma = " << k << " pi/8";
  }
}

// Properties over a 17 x 17 grid: entangled options never hurt, and at
// theta = 0 the best value is the classical best.
TEST(OracleProperties, DominanceAndThetaZeroArgmax) {
  for (int gi = 0; gi <= 16; ++gi) {
    for (int ti = 0; ti <= 16; ++ti) {
      const GameParams p(Angle::from_radians(gi * std::numbers::pi / 32),
                         Angle::from_radians(ti * std::numbers::pi / 32));
      for (const PayoffQuadruple& q : payoff_table()) {
        const auto v = ewl_payoffs(q, p);
        const double best = *std::max_element(v.begin(), v.end());
        const double classical = std::max(to_double(q.e_std), to_double(q.e_hit));
        EXPECT_GE(best, classical - 1e-15);
        if (ti == 0) EXPECT_NEAR(best, classical, 1e-15);
      }
    }
  }
}

TEST(Oracle, SweepCornersAndFlatColumn) {
  const SweepGrid g = sweep(9);
  EXPECT_EQ(g.values.size(), 81u);
  EXPECT_NEAR(g.at(0, 0), -1.0 / 60, 1e-15);
  EXPECT_NEAR(g.at(8, 8), 43.0 / 420, 1e-15);
  EXPECT_NEAR(g.at(4, 8), 1.0 / 56, 1e-15);
  for (int i = 0; i < 9; ++i) EXPECT_NEAR(g.at(i, 0), g.at(0, 0), 1e-15);
  EXPECT_THROW(sweep(1), ConfigurationError);
  const SweepGrid two = sweep(2);
  EXPECT_EQ(two.values.size(), 4u);
  EXPECT_NEAR(two.at(1, 1), 43.0 / 420, 1e-15);
}

// Independent cross-check: uniformly shuffled decks, no class decomposition
// in the expectation, each hand played under the regime the best strategy
// deterministically selects (I -> stand, X -> hit; at gamma = theta = pi/2,
// Y -> stand with frozen dealer, Z -> hit with frozen dealer).
double shuffled_deck_mean(const GameParams& p, StrategyMode mode, int hands, double& se) {
  std::mt19937_64 rng(99);
  std::array<int, 8> deck{0, 1, 2, 3, 4, 5, 6, 7};
  double sum = 0, sum_sq = 0;
  const auto sets = basic_strategy(p, mode);
  for (int h = 0; h < hands; ++h) {
    std::shuffle(deck.begin(), deck.end(), rng);
    const Deal deal{{CardSlot(deck[0]), CardSlot(deck[1])}, CardSlot(deck[2])};
    const StrategyOp s = sets[static_cast<std::size_t>(classify_initial(deal).row - 1)].first();
    const bool player_hits = s == StrategyOp::X || s == StrategyOp::Z;
    const bool dealer_hits = s == StrategyOp::I || s == StrategyOp::X;
    std::size_t next = 3;
    DeckMask player = deal.player_mask();
    if (player_hits) player.insert(CardSlot(deck[next++]));
    DeckMask dealer;
    dealer.insert(deal.up);
    dealer.insert(CardSlot(deck[next++]));
    while (dealer_hits && dealer_must_hit(dealer)) dealer.insert(CardSlot(deck[next++]));
    const int x = settle(player, dealer).payoff;
    sum += x;
    sum_sq += x * x;
  }
  const double mean = sum / hands;
  se = std::sqrt((sum_sq / hands - mean * mean) / (hands - 1));
  return mean;
}

TEST(Oracle, ShuffledDeckSamplerConverges) {
  double se = 0;
  const double classical = shuffled_deck_mean(GameParams::classical(), StrategyMode::Classical, 400000, se);
  EXPECT_NEAR(classical, -1.0 / 60, 4 * se);
  const double full = shuffled_deck_mean(kFull, StrategyMode::Quantum, 400000, se);
  EXPECT_NEAR(full, 43.0 / 420, 4 * se);
}

}  // namespace
}  // namespace snackjack
