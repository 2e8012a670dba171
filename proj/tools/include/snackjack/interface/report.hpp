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
#include <optional>
#include <string>
#include <string_view>

#include "snackjack/circuit.hpp"
#include "snackjack/exact.hpp"
#include "snackjack/oracle.hpp"

namespace snackjack::interface {

enum class TableFormat { Text, Csv, Json };

/// Throws ConfigurationError for anything but text, csv or json.
TableFormat parse_table_format(std::string_view name);

/// {"fraction": "p/q", "value": decimal}
nlohmann::json fraction_json(const Rational& r);
/// Exact form when available ({"exact", "value"}), otherwise just "value".
nlohmann::json payoff_json(double value, const std::optional<QuadraticSurd>& exact);
nlohmann::json angle_json(const Angle& a);

/// The sixteen-row initial state table. Classical mode lists E_std, E_hit
/// and the classical basic strategy; quantum mode adds E_00, E_10, the
/// entangled payoffs of Y and Z at the given angles and the quantum basic
/// strategy.
nlohmann::json table_json(const GameParams& p, StrategyMode mode);
std::string render_table(const GameParams& p, StrategyMode mode, TableFormat format);

/// CSV with header "gamma,theta,expectation", gamma outer, theta fastest.
std::string render_sweep_csv(const SweepGrid& grid);
nlohmann::json sweep_json(const SweepGrid& grid);

/// Expected payoff of a policy on one row according to the oracle.
double oracle_row_payoff(const circuit::Policy& policy, int row, const GameParams& p);
/// Oracle expectation for the whole spec (weighted over rows, or one row).
double oracle_expectation(const circuit::MonteCarloSpec& spec);

std::string policy_name(const circuit::Policy& policy);

nlohmann::json simulation_json(const circuit::MonteCarloSpec& spec, const circuit::MonteCarloResult& result);
std::string render_simulation(const circuit::MonteCarloSpec& spec, const circuit::MonteCarloResult& result);

}  // namespace snackjack::interface
