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

#include <optional>
#include <string>
#include <string_view>

#include "snackjack/exact.hpp"

namespace snackjack {

/// An angle in radians that remembers when it is an exact multiple of pi/8,
/// so trigonometric coefficients at the special angles stay exact.
class Angle {
 public:
  /// Radians within kSnapTolerance of a multiple of pi/8 snap to it.
  static constexpr double kSnapTolerance = 1e-6;

  constexpr Angle() = default;
  static Angle from_radians(double radians);
  static Angle pi_eighths(int k);

  double radians() const { return radians_; }
  std::optional<int> eighths() const { return eighths_; }
  bool is_exact() const { return eighths_.has_value(); }

  double sin2() const;
  double cos2() const;
  std::optional<QuadraticSurd> exact_sin2() const;
  std::optional<QuadraticSurd> exact_cos2() const;

  /// "0", "pi/2", "3pi/8", ... for exact angles, otherwise the shortest round-trip decimal.
  std::string label() const;

  friend bool operator==(const Angle& a, const Angle& b) {
    return a.eighths_ == b.eighths_ && a.radians_ == b.radians_;
  }

 private:
  double radians_ = 0.0;
  std::optional<int> eighths_ = 0;
};

/// Accepts decimal radians ("1.5707963") and symbolic tokens ("0", "pi",
/// "pi/2", "pi/4", "3pi/8", "3*pi/8"). Throws ConfigurationError.
Angle parse_angle(std::string_view text);

}  // namespace snackjack
