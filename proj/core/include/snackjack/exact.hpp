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

#include <boost/rational.hpp>

#include <compare>
#include <cstdint>
#include <string>

namespace snackjack {

using Rational = boost::rational<std::int64_t>;

/// "p/q" in lowest terms, or "p" when q = 1.
std::string to_string(const Rational& r);
/// Parses "p/q" or "p". Throws ConfigurationError.
Rational parse_rational(const std::string& text);
inline double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

/// Exact element a + b*sqrt(2) of Q(sqrt 2). Large enough to hold sin^2 and
/// cos^2 of every multiple of pi/8, and closed under the payoff arithmetic.
class QuadraticSurd {
 public:
  QuadraticSurd() = default;
  QuadraticSurd(Rational rational, Rational sqrt2_coeff = 0) : a_(rational), b_(sqrt2_coeff) {}
  QuadraticSurd(std::int64_t n) : a_(n) {}  // NOLINT(google-explicit-constructor)

  const Rational& rational_part() const { return a_; }
  const Rational& sqrt2_part() const { return b_; }
  bool is_rational() const { return b_.numerator() == 0; }
  double to_double() const;
  int sign() const;

  QuadraticSurd operator-() const { return {-a_, -b_}; }
  friend QuadraticSurd operator+(const QuadraticSurd& x, const QuadraticSurd& y) {
    return {x.a_ + y.a_, x.b_ + y.b_};
  }
  friend QuadraticSurd operator-(const QuadraticSurd& x, const QuadraticSurd& y) {
    return {x.a_ - y.a_, x.b_ - y.b_};
  }
  friend QuadraticSurd operator*(const QuadraticSurd& x, const QuadraticSurd& y) {
    return {x.a_ * y.a_ + 2 * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_};
  }
  QuadraticSurd& operator+=(const QuadraticSurd& y) { return *this = *this + y; }

  friend bool operator==(const QuadraticSurd& x, const QuadraticSurd& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend std::strong_ordering operator<=>(const QuadraticSurd& x, const QuadraticSurd& y) {
    const int s = (x - y).sign();
    return s < 0 ? std::strong_ordering::less
                 : s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

 private:
  Rational a_{0};
  Rational b_{0};
};

/// "p/q" for rational values, otherwise "p/q+r/s*sqrt2".
std::string to_string(const QuadraticSurd& x);

}  // namespace snackjack
