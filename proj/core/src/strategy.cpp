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

#include "snackjack/strategy.hpp"

#include <cctype>
#include <numbers>
#include <fmt/format.h>

#include "snackjack/errors.hpp"

namespace snackjack {

char strategy_tag(StrategyOp s) {
  static constexpr char kTags[] = {'I', 'X', 'Y', 'Z'};
  return kTags[static_cast<int>(s)];
}

StrategyOp parse_strategy(std::string_view tag) {
  if (tag.size() == 1) {
    switch (std::toupper(static_cast<unsigned char>(tag[0]))) {
      case 'I': return StrategyOp::I;
      case 'X': return StrategyOp::X;
      case 'Y': return StrategyOp::Y;
      case 'Z': return StrategyOp::Z;
      default: break;
    }
  }
  throw ConfigurationError(fmt::format("unknown strategy '{}' (expected I, X, Y or Z)", tag));
}

StrategyOp StrategySet::first() const {
  for (StrategyOp s : kAllStrategies) {
    if (contains(s)) return s;
  }
  throw InternalError("empty strategy set");
}

std::string StrategySet::to_string() const {
  std::string out;
  for (StrategyOp s : kAllStrategies) {
    if (!contains(s)) continue;
    if (!out.empty()) out += ',';
    out += strategy_tag(s);
  }
  return out;
}

GameParams::GameParams(Angle gamma, Angle theta) : gamma_(gamma), theta_(theta) {
  constexpr double kMax = std::numbers::pi / 2 + 1e-12;
  for (const Angle* a : {&gamma_, &theta_}) {
    if (a->radians() < -1e-12 || a->radians() > kMax) {
      throw ConfigurationError(fmt::format("angle {} outside [0, pi/2]", a->label()));
    }
  }
}

}  // namespace snackjack
