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

#include "snackjack/oracle.hpp"

#include <algorithm>
#include <numbers>
#include <fmt/format.h>

#include "snackjack/errors.hpp"

namespace snackjack {

namespace {

constexpr double kTieTolerance = 1e-12;

struct Regime {
  bool player_hits;
  bool dealer_hits;  // false: dealer turns the hole card and stops
};

int play_sequence(const Deal& deal, const std::vector<CardSlot>& order, Regime regime) {
  std::size_t next = 0;
  DeckMask player = deal.player_mask();
  if (regime.player_hits) {
    player.insert(order[next++]);
    if (hand_value(player).bust) return -1;
  }
  DeckMask dealer;
  dealer.insert(deal.up);
  dealer.insert(order[next++]);
  if (regime.dealer_hits) {
    while (dealer_must_hit(dealer)) {
      if (next >= order.size()) throw InternalError("deck exhausted during dealer draw");
      dealer.insert(order[next++]);
    }
  }
  return settle(player, dealer).payoff;
}

template <class T>
std::array<T, 4> payoff_map(const T& e_std, const T& e_hit, const T& e_00, const T& e_10,
                            const T& s2g, const T& c2g, const T& s2t, const T& c2t) {
  return {e_std, e_hit, s2g * (c2t * e_std + s2t * e_00) + c2g * e_hit,
          c2g * e_std + s2g * (c2t * e_hit + s2t * e_10)};
}

template <class T>
StrategySet argmax_set(const std::array<T, 4>& values, StrategyMode mode) {
  const std::size_t n = mode == StrategyMode::Classical ? 2 : 4;
  T best = values[0];
  for (std::size_t i = 1; i < n; ++i) best = std::max(best, values[i]);
  StrategySet out;
  for (std::size_t i = 0; i < n; ++i) {
    bool tie = false;
    if constexpr (std::is_same_v<T, double>) {
      tie = values[i] >= best - kTieTolerance;
    } else {
      tie = values[i] == best;
    }
    if (tie) out.insert(kAllStrategies[i]);
  }
  return out;
}

std::array<QuadraticSurd, 4> classical_values(const PayoffQuadruple& q) {
  return {q.e_std, q.e_hit, q.e_hit, q.e_std};
}

}  // namespace

PayoffQuadruple enumerate_quadruple(const InitialStateClass& cls) {
  constexpr std::array<Regime, 4> kRegimes{{{false, true}, {true, true}, {false, false}, {true, false}}};
  std::array<std::int64_t, 4> sums{};
  std::int64_t sequences = 0;
  for (const Deal& deal : class_members(cls.row)) {
    std::vector<CardSlot> order = deal.remaining().slots();
    do {
      for (std::size_t r = 0; r < kRegimes.size(); ++r) sums[r] += play_sequence(deal, order, kRegimes[r]);
      ++sequences;
    } while (std::next_permutation(order.begin(), order.end()));
  }
  if (sequences == 0) throw InternalError(fmt::format("row {} has no member deals", cls.row));
  return {Rational(sums[0], sequences), Rational(sums[1], sequences), Rational(sums[2], sequences),
          Rational(sums[3], sequences)};
}

std::span<const PayoffQuadruple, 16> payoff_table() {
  static const std::array<PayoffQuadruple, 16> table = [] {
    std::array<PayoffQuadruple, 16> t{};
    for (const InitialStateClass& cls : initial_classes()) {
      t[static_cast<std::size_t>(cls.row - 1)] = enumerate_quadruple(cls);
    }
    return t;
  }();
  return table;
}

std::array<Rational, 16> class_weights() {
  std::array<Rational, 16> w{};
  std::int64_t total = 0;
  for (const InitialStateClass& cls : initial_classes()) total += cls.cases;
  for (const InitialStateClass& cls : initial_classes()) {
    w[static_cast<std::size_t>(cls.row - 1)] = Rational(cls.cases, total);
  }
  return w;
}

std::array<double, 4> ewl_payoffs(const PayoffQuadruple& q, const GameParams& p) {
  if (auto exact = ewl_payoffs_exact(q, p)) {
    return {(*exact)[0].to_double(), (*exact)[1].to_double(), (*exact)[2].to_double(),
            (*exact)[3].to_double()};
  }
  return payoff_map<double>(to_double(q.e_std), to_double(q.e_hit), to_double(q.e_00),
                            to_double(q.e_10), p.gamma().sin2(), p.gamma().cos2(),
                            p.theta().sin2(), p.theta().cos2());
}

std::optional<std::array<QuadraticSurd, 4>> ewl_payoffs_exact(const PayoffQuadruple& q,
                                                              const GameParams& p) {
  if (!p.exact()) return std::nullopt;
  return payoff_map<QuadraticSurd>(q.e_std, q.e_hit, q.e_00, q.e_10, *p.gamma().exact_sin2(),
                                   *p.gamma().exact_cos2(), *p.theta().exact_sin2(),
                                   *p.theta().exact_cos2());
}

StrategySet best_strategies(int row, const GameParams& p, StrategyMode mode) {
  const PayoffQuadruple& q = payoff_table()[static_cast<std::size_t>(initial_class(row).row - 1)];
  if (mode == StrategyMode::Classical) return argmax_set(classical_values(q), mode);
  if (auto exact = ewl_payoffs_exact(q, p)) return argmax_set(*exact, mode);
  return argmax_set(ewl_payoffs(q, p), mode);
}

std::array<StrategySet, 16> basic_strategy(const GameParams& p, StrategyMode mode) {
  std::array<StrategySet, 16> out{};
  for (int row = 1; row <= 16; ++row) out[static_cast<std::size_t>(row - 1)] = best_strategies(row, p, mode);
  return out;
}

Expectation overall_expectation(const GameParams& p, StrategyMode mode) {
  const auto weights = class_weights();
  const auto table = payoff_table();
  if (mode == StrategyMode::Classical || p.exact()) {
    QuadraticSurd total;
    for (std::size_t i = 0; i < table.size(); ++i) {
      const auto values =
          mode == StrategyMode::Classical ? classical_values(table[i]) : *ewl_payoffs_exact(table[i], p);
      const std::size_t n = mode == StrategyMode::Classical ? 2 : 4;
      QuadraticSurd best = values[0];
      for (std::size_t k = 1; k < n; ++k) best = std::max(best, values[k]);
      total += QuadraticSurd(weights[i]) * best;
    }
    return {total.to_double(), total};
  }
  double total = 0.0;
  for (std::size_t i = 0; i < table.size(); ++i) {
    const auto values = ewl_payoffs(table[i], p);
    total += to_double(weights[i]) * *std::max_element(values.begin(), values.end());
  }
  return {total, std::nullopt};
}

SweepGrid sweep(int resolution) {
  if (resolution < 2) throw ConfigurationError("sweep resolution must be at least 2 points per axis");
  SweepGrid grid;
  grid.resolution = resolution;
  for (int i = 0; i < resolution; ++i) {
    grid.axis.push_back(Angle::from_radians(i * (std::numbers::pi / 2) / (resolution - 1)));
  }
  grid.values.reserve(static_cast<std::size_t>(resolution) * static_cast<std::size_t>(resolution));
  for (const Angle& gamma : grid.axis) {
    for (const Angle& theta : grid.axis) {
      grid.values.push_back(overall_expectation(GameParams(gamma, theta)).value);
    }
  }
  return grid;
}

}  // namespace snackjack
