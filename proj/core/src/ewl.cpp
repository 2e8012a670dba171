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

#include "snackjack/ewl.hpp"

#include <algorithm>
#include <cmath>

namespace snackjack::ewl {

namespace {
constexpr unsigned kPlayerQubit = 1;
constexpr unsigned kDealerQubit = 0;
}  // namespace

Matrix2 dealer_axis(const GameParams& p) {
  const double s = std::sin(p.theta().radians());
  const double c = std::cos(p.theta().radians());
  return {c, s, s, -c};
}

Entangler build_entangler(const GameParams& p) {
  const double half = p.gamma().radians() / 2;
  const Matrix4 xu = qsim::matrices::kron(qsim::matrices::pauli_x(), dealer_axis(p));
  const Amplitude minus_i_sin(0.0, -std::sin(half));
  Matrix4 j{};
  for (std::size_t i = 0; i < j.size(); ++i) j[i] = minus_i_sin * xu[i];
  for (std::size_t d = 0; d < 4; ++d) j[d * 5] += std::cos(half);
  return {j, qsim::matrices::dagger(j)};
}

Matrix2 strategy_matrix(StrategyOp s) {
  switch (s) {
    case StrategyOp::I: return qsim::matrices::identity();
    case StrategyOp::X: return qsim::matrices::pauli_x();
    case StrategyOp::Y: return qsim::matrices::pauli_y();
    case StrategyOp::Z: return qsim::matrices::pauli_z();
  }
  return qsim::matrices::identity();
}

TwoQubitState strategy_post_state(const Matrix2& strategy, const GameParams& p) {
  const Entangler e = build_entangler(p);
  qsim::SparseState state(kStandIndex, 2);
  state.apply(qsim::TwoQubitGate{e.j, kPlayerQubit, kDealerQubit});
  state.apply(qsim::OneQubitGate{strategy, kPlayerQubit});
  state.apply(qsim::TwoQubitGate{e.j_dagger, kPlayerQubit, kDealerQubit});
  TwoQubitState out{};
  for (const auto& entry : state.entries()) out[entry.basis] = entry.amplitude;
  return out;
}

TwoQubitState strategy_post_state(StrategyOp s, const GameParams& p) {
  return strategy_post_state(strategy_matrix(s), p);
}

TwoQubitState closed_form_post_state(StrategyOp s, const GameParams& p) {
  const double g = p.gamma().radians();
  const double t = p.theta().radians();
  const Amplitude i(0.0, 1.0);
  TwoQubitState v{};
  switch (s) {
    case StrategyOp::I:
      v[0b01] = 1.0;
      break;
    case StrategyOp::X:
      v[0b11] = 1.0;
      break;
    case StrategyOp::Y:
      v[0b11] = i * std::cos(g);
      v[0b01] = std::sin(g) * std::cos(t);
      v[0b00] = -std::sin(g) * std::sin(t);
      break;
    case StrategyOp::Z:
      v[0b01] = std::cos(g);
      v[0b11] = -i * std::sin(g) * std::cos(t);
      v[0b10] = i * std::sin(g) * std::sin(t);
      break;
  }
  return v;
}

OutcomeDistribution outcome_distribution(const Matrix2& strategy, const GameParams& p) {
  const TwoQubitState psi = strategy_post_state(strategy, p);
  OutcomeDistribution d{};
  for (std::size_t k = 0; k < 4; ++k) d[k] = std::norm(psi[k]);
  return d;
}

OutcomeDistribution outcome_distribution(StrategyOp s, const GameParams& p) {
  return outcome_distribution(strategy_matrix(s), p);
}

double expected_payoff(const OutcomeDistribution& dist, const PayoffQuadruple& q) {
  return dist[0b00] * to_double(q.e_00) + dist[0b01] * to_double(q.e_std) +
         dist[0b10] * to_double(q.e_10) + dist[0b11] * to_double(q.e_hit);
}

Matrix4 conjugate(const Entangler& e, const Matrix4& m) {
  return qsim::matrices::multiply(e.j_dagger, qsim::matrices::multiply(m, e.j));
}

double phase_aligned_distance(const TwoQubitState& a, const TwoQubitState& b) {
  std::size_t k = 0;
  for (std::size_t i = 1; i < b.size(); ++i) {
    if (std::abs(b[i]) > std::abs(b[k])) k = i;
  }
  Amplitude phase = 1.0;
  if (std::abs(a[k]) > 0.0) phase = (b[k] / std::abs(b[k])) / (a[k] / std::abs(a[k]));
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] * phase - b[i]));
  return worst;
}

double max_abs_difference(const Matrix4& a, const Matrix4& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

}  // namespace snackjack::ewl
