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
#include <optional>
#include <string>
#include <string_view>

#include "snackjack/angle.hpp"

namespace snackjack {

/// The player's restricted quantum strategy set {I, X, Y, Z}.
enum class StrategyOp : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

inline constexpr std::array<StrategyOp, 4> kAllStrategies{StrategyOp::I, StrategyOp::X,
                                                          StrategyOp::Y, StrategyOp::Z};

char strategy_tag(StrategyOp s);
/// Single-letter tag, case-insensitive. Throws ConfigurationError.
StrategyOp parse_strategy(std::string_view tag);

/// A set of strategies iterated in the fixed order I < X < Y < Z.
class StrategySet {
 public:
  constexpr StrategySet() = default;
  constexpr StrategySet(std::initializer_list<StrategyOp> ops) {
    for (StrategyOp s : ops) insert(s);
  }
  constexpr void insert(StrategyOp s) { bits_ |= static_cast<std::uint8_t>(1u << static_cast<int>(s)); }
  constexpr bool contains(StrategyOp s) const { return (bits_ >> static_cast<int>(s)) & 1u; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::uint8_t bits() const { return bits_; }
  /// Lowest member in I < X < Y < Z order.
  StrategyOp first() const;
  /// "I,X,Y,Z" style.
  std::string to_string() const;

  friend constexpr bool operator==(StrategySet, StrategySet) = default;

 private:
  std::uint8_t bits_ = 0;
};

/// Entangle intensity gamma and game parameter theta, both in [0, pi/2].
class GameParams {
 public:
  GameParams() = default;
  /// Throws ConfigurationError when an angle leaves [0, pi/2].
  GameParams(Angle gamma, Angle theta);

  static GameParams classical() { return {}; }

  const Angle& gamma() const { return gamma_; }
  const Angle& theta() const { return theta_; }
  bool exact() const { return gamma_.is_exact() && theta_.is_exact(); }

 private:
  Angle gamma_;
  Angle theta_;
};

/// Whether argmax runs over {I, X} (the classical game) or over all four.
enum class StrategyMode : std::uint8_t { Classical, Quantum };

}  // namespace snackjack
