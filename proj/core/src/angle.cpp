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

#include "snackjack/angle.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <fmt/format.h>

#include "snackjack/errors.hpp"

namespace snackjack {

namespace {

constexpr double kEighth = std::numbers::pi / 8.0;

// sin^2(k pi / 8) for k = 0..7; period 8.
QuadraticSurd sin2_eighths(int k) {
  const int m = ((k % 8) + 8) % 8;
  switch (m) {
    case 0: return 0;
    case 1: case 7: return {Rational(1, 2), Rational(-1, 4)};
    case 2: case 6: return Rational(1, 2);
    default: break;
  }
  if (m == 4) return 1;
  return {Rational(1, 2), Rational(1, 4)};  // 3, 5
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

bool parse_int(std::string_view s, long& out) {
  if (s.empty()) return false;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace

Angle Angle::from_radians(double radians) {
  if (!std::isfinite(radians)) throw ConfigurationError("angle must be finite");
  Angle a;
  a.radians_ = radians;
  a.eighths_.reset();
  const double k = std::round(radians / kEighth);
  if (std::abs(radians - k * kEighth) <= kSnapTolerance) {
    a.eighths_ = static_cast<int>(k);
    a.radians_ = k * kEighth;
  }
  return a;
}

Angle Angle::pi_eighths(int k) {
  Angle a;
  a.eighths_ = k;
  a.radians_ = k * kEighth;
  return a;
}

double Angle::sin2() const {
  if (eighths_) return sin2_eighths(*eighths_).to_double();
  const double s = std::sin(radians_);
  return s * s;
}

double Angle::cos2() const {
  if (eighths_) return (QuadraticSurd(1) - sin2_eighths(*eighths_)).to_double();
  const double c = std::cos(radians_);
  return c * c;
}

std::optional<QuadraticSurd> Angle::exact_sin2() const {
  if (!eighths_) return std::nullopt;
  return sin2_eighths(*eighths_);
}

std::optional<QuadraticSurd> Angle::exact_cos2() const {
  if (!eighths_) return std::nullopt;
  return QuadraticSurd(1) - sin2_eighths(*eighths_);
}

std::string Angle::label() const {
  if (!eighths_) return fmt::format("{}", radians_);
  const int k = *eighths_;
  if (k == 0) return "0";
  // Reduce k/8 to lowest terms.
  int num = k;
  int den = 8;
  while (den > 1 && num % 2 == 0) {
    num /= 2;
    den /= 2;
  }
  const std::string coeff = num == 1 ? "" : num == -1 ? "-" : fmt::format("{}", num);
  if (den == 1) return coeff + "pi";
  return fmt::format("{}pi/{}", coeff, den);
}

Angle parse_angle(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.empty()) throw ConfigurationError("empty angle");
  const auto pi_pos = s.find("pi");
  if (pi_pos == std::string_view::npos) {
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
      throw ConfigurationError(fmt::format("malformed angle '{}'", text));
    }
    return Angle::from_radians(value);
  }
  std::string_view coeff = trim(s.substr(0, pi_pos));
  if (!coeff.empty() && coeff.back() == '*') coeff = trim(coeff.substr(0, coeff.size() - 1));
  std::string_view rest = trim(s.substr(pi_pos + 2));
  long num = 1;
  if (coeff == "-") {
    num = -1;
  } else if (!coeff.empty() && !parse_int(coeff, num)) {
    throw ConfigurationError(fmt::format("malformed angle '{}'", text));
  }
  long den = 1;
  if (!rest.empty()) {
    if (rest.front() != '/' || !parse_int(trim(rest.substr(1)), den) || den <= 0) {
      throw ConfigurationError(fmt::format("malformed angle '{}'", text));
    }
  }
  if ((num * 8) % den == 0) return Angle::pi_eighths(static_cast<int>(num * 8 / den));
  return Angle::from_radians(static_cast<double>(num) * std::numbers::pi / static_cast<double>(den));
}

}  // namespace snackjack
