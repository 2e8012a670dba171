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

#include "snackjack/exact.hpp"

#include <cmath>
#include <fmt/format.h>

#include "snackjack/errors.hpp"

namespace snackjack {

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return fmt::format("{}", r.numerator());
  return fmt::format("{}/{}", r.numerator(), r.denominator());
}

Rational parse_rational(const std::string& text) {
  try {
    std::size_t used = 0;
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
      const long long n = std::stoll(text, &used);
      if (used != text.size()) throw ConfigurationError("trailing characters");
      return Rational(n);
    }
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    const long long p = std::stoll(num, &used);
    if (used != num.size()) throw ConfigurationError("trailing characters");
    const long long q = std::stoll(den, &used);
    if (used != den.size() || q == 0) throw ConfigurationError("bad denominator");
    return Rational(p, q);
  } catch (const std::logic_error&) {
    throw ConfigurationError(fmt::format("malformed fraction '{}'", text));
  }
}

double QuadraticSurd::to_double() const {
  return snackjack::to_double(a_) + snackjack::to_double(b_) * std::sqrt(2.0);
}

int QuadraticSurd::sign() const {
  const int sa = a_ > 0 ? 1 : a_ < 0 ? -1 : 0;
  const int sb = b_ > 0 ? 1 : b_ < 0 ? -1 : 0;
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: compare a^2 against 2 b^2.
  const Rational lhs = a_ * a_;
  const Rational rhs = 2 * b_ * b_;
  if (lhs == rhs) return 0;
  return lhs > rhs ? sa : sb;
}

std::string to_string(const QuadraticSurd& x) {
  if (x.is_rational()) return to_string(x.rational_part());
  const Rational& b = x.sqrt2_part();
  if (x.rational_part().numerator() == 0) return fmt::format("{}*sqrt2", to_string(b));
  return fmt::format("{}{}{}*sqrt2", to_string(x.rational_part()), b > 0 ? "+" : "", to_string(b));
}

}  // namespace snackjack
