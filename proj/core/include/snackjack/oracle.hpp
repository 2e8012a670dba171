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
#include <optional>
#include <span>
#include <vector>

#include "snackjack/exact.hpp"
#include "snackjack/rules.hpp"
#include "snackjack/strategy.hpp"

namespace snackjack {

/// Exact unit-bet expectations of the four joint outcomes of an initial
/// class: stand (01), hit (11), stand with frozen dealer (00), hit with
/// frozen dealer (10).
struct PayoffQuadruple {
  Rational e_std;
  Rational e_hit;
  Rational e_00;
  Rational e_10;

  friend bool operator==(const PayoffQuadruple&, const PayoffQuadruple&) = default;
};

/// Exhaustive average over every member deal of the class and every
/// ordering of the five undealt cards.
PayoffQuadruple enumerate_quadruple(const InitialStateClass& cls);

/// Cached quadruples for rows 1..16 (index row - 1).
std::span<const PayoffQuadruple, 16> payoff_table();

/// cases / 168 per row.
std::array<Rational, 16> class_weights();

/// Player utility for each of I, X, Y, Z under the entangled payoff map.
std::array<double, 4> ewl_payoffs(const PayoffQuadruple& q, const GameParams& p);
/// Same map in Q(sqrt 2); nullopt unless both angles are multiples of pi/8.
std::optional<std::array<QuadraticSurd, 4>> ewl_payoffs_exact(const PayoffQuadruple& q,
                                                              const GameParams& p);

/// Maximizing strategies for one row. Classical mode argmaxes over {I, X}
/// only. Floating comparisons treat values within 1e-12 as ties.
StrategySet best_strategies(int row, const GameParams& p, StrategyMode mode);
std::array<StrategySet, 16> basic_strategy(const GameParams& p, StrategyMode mode);

struct Expectation {
  double value = 0.0;
  std::optional<QuadraticSurd> exact;
};

/// Sum over rows of weight(row) times the best achievable utility.
Expectation overall_expectation(const GameParams& p, StrategyMode mode = StrategyMode::Quantum);

/// Row-major (gamma outer, theta fastest) grid over [0, pi/2]^2.
struct SweepGrid {
  int resolution = 0;
  std::vector<Angle> axis;      // shared by gamma and theta
  std::vector<double> values;   // resolution * resolution

  double at(int gamma_index, int theta_index) const {
    return values[static_cast<std::size_t>(gamma_index * resolution + theta_index)];
  }
};

/// Throws ConfigurationError when resolution < 2.
SweepGrid sweep(int resolution);

}  // namespace snackjack
