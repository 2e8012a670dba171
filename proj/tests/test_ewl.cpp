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

#include <cmath>
#include <numbers>

#include "snackjack/ewl.hpp"

namespace snackjack::ewl {
namespace {

namespace M = qsim::matrices;

std::vector<GameParams> grid9() {
  std::vector<GameParams> out;
  for (int gi = 0; gi <= 8; ++gi) {
    for (int ti = 0; ti <= 8; ++ti) {
      out.emplace_back(Angle::from_radians(gi * std::numbers::pi / 16),
                       Angle::from_radians(ti * std::numbers::pi / 16));
    }
  }
  return out;
}

const GameParams kFull(Angle::pi_eighths(4), Angle::pi_eighths(4));

TEST(Entangler, UnitaryAndIdentityAtZero) {
  for (const GameParams& p : grid9()) {
    const Entangler e = build_entangler(p);
    EXPECT_LT(M::unitarity_defect(e.j), 1e-12);
    const Matrix2 u = dealer_axis(p);
    EXPECT_LT(M::unitarity_defect(u), 1e-12);
    const Matrix2 u2 = M::multiply(u, u);
    EXPECT_NEAR(std::abs(u2[0] - 1.0) + std::abs(u2[1]) + std::abs(u2[2]) + std::abs(u2[3] - 1.0), 0.0,
                1e-12);
  }
  const Entangler e0 = build_entangler(GameParams::classical());
  EXPECT_LT(max_abs_difference(e0.j, M::kron(M::identity(), M::identity())), 1e-15);
}

TEST(Entangler, ClassicalOperatorsCommute) {
  const Matrix4 ii = M::kron(M::identity(), M::identity());
  const Matrix4 xi = M::kron(M::pauli_x(), M::identity());
  for (const GameParams& p : grid9()) {
    const Entangler e = build_entangler(p);
    EXPECT_LT(max_abs_difference(conjugate(e, xi), xi), 1e-12);
    EXPECT_LT(max_abs_difference(conjugate(e, ii), ii), 1e-12);
  }
}

TEST(PostState, MatchesClosedFormsOnGrid) {
  for (const GameParams& p : grid9()) {
    for (StrategyOp s : kAllStrategies) {
      const TwoQubitState sim = strategy_post_state(s, p);
      const TwoQubitState printed = closed_form_post_state(s, p);
      EXPECT_LT(phase_aligned_distance(sim, printed), 1e-12)
          << strategy_tag(s) << " at " << p.gamma().label() << ", " << p.theta().label();
      // The convention here carries no global phase at all.
      for (std::size_t k = 0; k < 4; ++k) EXPECT_LT(std::abs(sim[k] - printed[k]), 1e-12);
    }
  }
}

TEST(PostState, OppositeDaggerOrderDisagrees) {
  // J (Y x I) J^dagger |01> is a different state; the tables rely on the
  // J^dagger (S x I) J order.
  const GameParams p(Angle::pi_eighths(2), Angle::pi_eighths(4));
  const Entangler e = build_entangler(p);
  const Matrix4 y = M::kron(M::pauli_y(), M::identity());
  const Matrix4 flipped = M::multiply(e.j, M::multiply(y, e.j_dagger));
  TwoQubitState other{};
  for (std::size_t r = 0; r < 4; ++r) other[r] = flipped[r * 4 + kStandIndex];
  EXPECT_GT(phase_aligned_distance(other, closed_form_post_state(StrategyOp::Y, p)), 0.1);
}

TEST(PostState, SpecialAngleExamples) {
  const Amplitude i(0, 1);
  const TwoQubitState y = strategy_post_state(StrategyOp::Y, kFull);
  EXPECT_LT(std::abs(y[0b00] + 1.0), 1e-15);
  const TwoQubitState z = strategy_post_state(StrategyOp::Z, kFull);
  EXPECT_LT(std::abs(z[0b10] - i), 1e-15);
  const TwoQubitState id = strategy_post_state(StrategyOp::I, GameParams(Angle::from_radians(0.3), Angle::from_radians(1.2)));
  EXPECT_LT(std::abs(id[0b01] - 1.0), 1e-15);
}

TEST(OutcomeDistribution, PrintedExamples) {
  const double g = 0.8, t = 0.5;
  const GameParams p(Angle::from_radians(g), Angle::from_radians(t));
  const OutcomeDistribution y = outcome_distribution(StrategyOp::Y, p);
  EXPECT_NEAR(y[0b11], std::pow(std::cos(g), 2), 1e-12);
  EXPECT_NEAR(y[0b01], std::pow(std::sin(g) * std::cos(t), 2), 1e-12);
  EXPECT_NEAR(y[0b00], std::pow(std::sin(g) * std::sin(t), 2), 1e-12);
  EXPECT_NEAR(y[0b10], 0.0, 1e-12);
  const OutcomeDistribution z0 = outcome_distribution(StrategyOp::Z, GameParams::classical());
  EXPECT_NEAR(z0[0b01], 1.0, 1e-15);
}

TEST(OutcomeDistribution, ClassicalEmbeddingAndNormalization) {
  for (const GameParams& p : grid9()) {
    const OutcomeDistribution i = outcome_distribution(StrategyOp::I, p);
    const OutcomeDistribution x = outcome_distribution(StrategyOp::X, p);
    EXPECT_NEAR(i[0b01], 1.0, 1e-12);
    EXPECT_NEAR(x[0b11], 1.0, 1e-12);
    for (StrategyOp s : kAllStrategies) {
      const OutcomeDistribution d = outcome_distribution(s, p);
      EXPECT_NEAR(d[0] + d[1] + d[2] + d[3], 1.0, 1e-12);
    }
  }
}

TEST(OutcomeDistribution, ConsistencyBridgeWithOracle) {
  for (const GameParams& p : grid9()) {
    for (const PayoffQuadruple& q : payoff_table()) {
      const auto oracle = ewl_payoffs(q, p);
      for (StrategyOp s : kAllStrategies) {
        const double sim = expected_payoff(outcome_distribution(s, p), q);
        EXPECT_NEAR(sim, oracle[static_cast<std::size_t>(s)], 1e-12);
      }
    }
  }
}

TEST(OutcomeDistribution, ExactAtSpecialAngles) {
  for (int k = 0; k <= 4; ++k) {
    const GameParams p(Angle::pi_eighths(k), Angle::pi_eighths(4));
    for (const PayoffQuadruple& q : payoff_table()) {
      const auto exact = *ewl_payoffs_exact(q, p);
      for (StrategyOp s : kAllStrategies) {
        const double sim = expected_payoff(outcome_distribution(s, p), q);
        EXPECT_NEAR(sim, exact[static_cast<std::size_t>(s)].to_double(), 1e-13);
      }
    }
  }
}

TEST(OutcomeDistribution, ArbitraryUnitaryStaysNormalized) {
  const Amplitude i(0, 1);
  const double a = 0.37;
  const Matrix2 u{std::cos(a), i * std::sin(a), i * std::sin(a), std::cos(a)};
  const OutcomeDistribution d = outcome_distribution(u, kFull);
  EXPECT_NEAR(d[0] + d[1] + d[2] + d[3], 1.0, 1e-12);
}

}  // namespace
}  // namespace snackjack::ewl
