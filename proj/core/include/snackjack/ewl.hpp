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

#include "snackjack/oracle.hpp"
#include "snackjack/qsim.hpp"
#include "snackjack/strategy.hpp"

namespace snackjack::ewl {

using qsim::Amplitude;
using qsim::Matrix2;
using qsim::Matrix4;

/// Amplitudes over |player dealer>, index 2*player + dealer.
using TwoQubitState = std::array<Amplitude, 4>;
/// Probabilities over 00, 01, 10, 11 in the same indexing.
using OutcomeDistribution = std::array<double, 4>;

inline constexpr int kStandIndex = 0b01;  // initial state: player stands, dealer hits
inline constexpr int kHitIndex = 0b11;

struct Entangler {
  Matrix4 j;
  Matrix4 j_dagger;
};

/// U = sin(theta) X + cos(theta) Z.
Matrix2 dealer_axis(const GameParams& p);

/// J = exp(-i gamma/2 X (x) U) = cos(gamma/2) I - i sin(gamma/2) X (x) U,
/// valid because (X (x) U)^2 = I.
Entangler build_entangler(const GameParams& p);

Matrix2 strategy_matrix(StrategyOp s);

/// J^dagger (S (x) I) J |01>, built by running the gates on a two-qubit
/// sparse register.
TwoQubitState strategy_post_state(const Matrix2& strategy, const GameParams& p);
TwoQubitState strategy_post_state(StrategyOp s, const GameParams& p);

/// The closed-form post-states for I, X, Y, Z.
TwoQubitState closed_form_post_state(StrategyOp s, const GameParams& p);

OutcomeDistribution outcome_distribution(const Matrix2& strategy, const GameParams& p);
OutcomeDistribution outcome_distribution(StrategyOp s, const GameParams& p);

/// Probability-weighted payoff: E_00, E_std, E_10, E_hit at 00, 01, 10, 11.
double expected_payoff(const OutcomeDistribution& dist, const PayoffQuadruple& q);

/// J^dagger M J.
Matrix4 conjugate(const Entangler& e, const Matrix4& m);

/// Largest componentwise difference after rotating `a` onto the global
/// phase of `b` (aligned on b's largest component).
double phase_aligned_distance(const TwoQubitState& a, const TwoQubitState& b);

double max_abs_difference(const Matrix4& a, const Matrix4& b);

}  // namespace snackjack::ewl
