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

#include <nlohmann/json.hpp>

#include "snackjack/circuit.hpp"

namespace snackjack::circuit {

/// {"initial_class", "player_cards", "dealer_upcard", "player_final",
///  "dealer_final", "control_outcomes", "retries", "strategy_outcome",
///  "payoff"}. Card lists are slot indices in ascending order; the
/// strategy outcome is the two-character string "<player><dealer>".
void to_json(nlohmann::json& j, const GameRecord& r);
/// Throws ConfigurationError on a malformed or inconsistent record.
void from_json(const nlohmann::json& j, GameRecord& r);

}  // namespace snackjack::circuit
