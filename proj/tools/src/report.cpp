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

#include "snackjack/interface/report.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <vector>

#include "snackjack/errors.hpp"
#include "snackjack/ewl.hpp"

namespace snackjack::interface {

namespace {

using Grid = std::vector<std::vector<std::string>>;

std::string render_columns(const Grid& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    width.resize(std::max(width.size(), row.size()));
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line.append(width[c] - row[c].size() + 2, ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line;
    out += '\n';
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

std::string payoff_text(double value, const std::optional<QuadraticSurd>& exact) {
  if (exact) return to_string(*exact);
  return fmt::format("{:.6f}", value);
}

std::string percent(double value) { return fmt::format("{:+.3f}%", 100 * value); }

struct TableRow {
  const InitialStateClass* cls;
  const PayoffQuadruple* q;
  std::array<double, 4> payoffs;
  std::optional<std::array<QuadraticSurd, 4>> exact;
  StrategySet best;
};

std::vector<TableRow> table_rows(const GameParams& p, StrategyMode mode) {
  std::vector<TableRow> rows;
  for (const InitialStateClass& cls : initial_classes()) {
    const PayoffQuadruple& q = payoff_table()[static_cast<std::size_t>(cls.row - 1)];
    rows.push_back({&cls, &q, ewl_payoffs(q, p), ewl_payoffs_exact(q, p), best_strategies(cls.row, p, mode)});
  }
  return rows;
}

std::string title(const GameParams& p, StrategyMode mode) {
  if (mode == StrategyMode::Classical) return "Snackjack initial states, classical game";
  return fmt::format("Snackjack initial states, gamma = {}, theta = {}", p.gamma().label(), p.theta().label());
}

std::optional<QuadraticSurd> exact_at(const TableRow& r, StrategyOp s) {
  if (!r.exact) return std::nullopt;
  return (*r.exact)[static_cast<std::size_t>(s)];
}

}  // namespace

TableFormat parse_table_format(std::string_view name) {
  if (name == "text") return TableFormat::Text;
  if (name == "csv") return TableFormat::Csv;
  if (name == "json") return TableFormat::Json;
  throw ConfigurationError(fmt::format("unknown format '{}'", name));
}

nlohmann::json fraction_json(const Rational& r) { return {{"fraction", to_string(r)}, {"value", to_double(r)}}; }

nlohmann::json payoff_json(double value, const std::optional<QuadraticSurd>& exact) {
  nlohmann::json j{{"value", value}};
  if (!exact) return j;
  j["exact"] = to_string(*exact);
  if (exact->is_rational()) j["fraction"] = to_string(exact->rational_part());
  return j;
}

nlohmann::json angle_json(const Angle& a) { return {{"label", a.label()}, {"radians", a.radians()}}; }

nlohmann::json table_json(const GameParams& p, StrategyMode mode) {
  const bool quantum = mode == StrategyMode::Quantum;
  nlohmann::json rows = nlohmann::json::array();
  int total = 0;
  for (const TableRow& r : table_rows(p, mode)) {
    nlohmann::json row{{"row", r.cls->row},
                       {"player", describe_ranks(r.cls->player_ranks)},
                       {"up", std::string(1, rank_symbol(r.cls->up))},
                       {"cases", r.cls->cases},
                       {"e_std", fraction_json(r.q->e_std)},
                       {"e_hit", fraction_json(r.q->e_hit)}};
    if (quantum) {
      row["e_00"] = fraction_json(r.q->e_00);
      row["e_10"] = fraction_json(r.q->e_10);
      nlohmann::json payoffs;
      for (StrategyOp s : kAllStrategies) {
        payoffs[std::string(1, strategy_tag(s))] = payoff_json(r.payoffs[static_cast<std::size_t>(s)], exact_at(r, s));
      }
      row["payoffs"] = payoffs;
    }
    nlohmann::json best = nlohmann::json::array();
    for (StrategyOp s : kAllStrategies) {
      if (r.best.contains(s)) best.push_back(std::string(1, strategy_tag(s)));
    }
    row["best"] = best;
    rows.push_back(row);
    total += r.cls->cases;
  }
  const Expectation overall = overall_expectation(p, mode);
  nlohmann::json out{{"mode", quantum ? "quantum" : "classical"},
                     {"rows", rows},
                     {"total_cases", total},
                     {"overall", payoff_json(overall.value, overall.exact)}};
  if (quantum) {
    out["gamma"] = angle_json(p.gamma());
    out["theta"] = angle_json(p.theta());
  }
  return out;
}

std::string render_table(const GameParams& p, StrategyMode mode, TableFormat format) {
  if (format == TableFormat::Json) return table_json(p, mode).dump(2) + "\n";
  const bool quantum = mode == StrategyMode::Quantum;
  const std::vector<TableRow> rows = table_rows(p, mode);

  Grid grid;
  std::vector<std::string> header{"row", "player", "up", "E_std", "E_hit"};
  if (quantum) header.insert(header.end(), {"E_00", "E_10", "E_Y", "E_Z"});
  header.insert(header.end(), {"cases", quantum ? "QBS" : "CBS"});
  grid.push_back(header);
  int total = 0;
  for (const TableRow& r : rows) {
    std::vector<std::string> line{std::to_string(r.cls->row), describe_ranks(r.cls->player_ranks),
                                  std::string(1, rank_symbol(r.cls->up)), to_string(r.q->e_std),
                                  to_string(r.q->e_hit)};
    if (quantum) {
      line.push_back(to_string(r.q->e_00));
      line.push_back(to_string(r.q->e_10));
      for (StrategyOp s : {StrategyOp::Y, StrategyOp::Z}) {
        line.push_back(payoff_text(r.payoffs[static_cast<std::size_t>(s)], exact_at(r, s)));
      }
    }
    line.push_back(std::to_string(r.cls->cases));
    line.push_back(r.best.to_string());
    grid.push_back(line);
    total += r.cls->cases;
  }

  const Expectation overall = overall_expectation(p, mode);
  if (format == TableFormat::Csv) {
    std::string out;
    for (const auto& line : grid) {
      for (std::size_t c = 0; c < line.size(); ++c) {
        if (c > 0) out += ',';
        out += csv_field(line[c]);
      }
      out += '\n';
    }
    return out;
  }

  std::vector<std::string> footer(grid.front().size());
  footer[0] = "total";
  footer[footer.size() - 2] = std::to_string(total);
  grid.push_back(footer);
  std::string out = title(p, mode) + "\n\n" + render_columns(grid) + "\n";
  out += fmt::format("overall expectation: {} ({})\n", payoff_text(overall.value, overall.exact),
                     percent(overall.value));
  return out;
}

std::string render_sweep_csv(const SweepGrid& grid) {
  std::string out = "gamma,theta,expectation\n";
  for (int g = 0; g < grid.resolution; ++g) {
    for (int t = 0; t < grid.resolution; ++t) {
      out += fmt::format("{},{},{}\n", grid.axis[static_cast<std::size_t>(g)].radians(),
                         grid.axis[static_cast<std::size_t>(t)].radians(), grid.at(g, t));
    }
  }
  return out;
}

nlohmann::json sweep_json(const SweepGrid& grid) {
  nlohmann::json axis = nlohmann::json::array();
  for (const Angle& a : grid.axis) axis.push_back(a.radians());
  nlohmann::json values = nlohmann::json::array();
  for (int g = 0; g < grid.resolution; ++g) {
    nlohmann::json row = nlohmann::json::array();
    for (int t = 0; t < grid.resolution; ++t) row.push_back(grid.at(g, t));
    values.push_back(row);
  }
  return {{"resolution", grid.resolution}, {"axis", axis}, {"values", values}, {"layout", "values[gamma][theta]"}};
}

double oracle_row_payoff(const circuit::Policy& policy, int row, const GameParams& p) {
  const PayoffQuadruple& q = payoff_table()[static_cast<std::size_t>(row - 1)];
  const circuit::StrategyChoice choice = policy.choose(row, p);
  if (const auto* m = std::get_if<qsim::Matrix2>(&choice)) {
    return ewl::expected_payoff(ewl::outcome_distribution(*m, p), q);
  }
  return ewl_payoffs(q, p)[static_cast<std::size_t>(std::get<StrategyOp>(choice))];
}

double oracle_expectation(const circuit::MonteCarloSpec& spec) {
  if (spec.row) return oracle_row_payoff(spec.policy, *spec.row, spec.params);
  const auto weights = class_weights();
  double total = 0;
  for (int row = 1; row <= 16; ++row) {
    total += to_double(weights[static_cast<std::size_t>(row - 1)]) * oracle_row_payoff(spec.policy, row, spec.params);
  }
  return total;
}

std::string policy_name(const circuit::Policy& policy) {
  switch (policy.kind) {
    case circuit::Policy::Kind::ClassicalBasic: return "cbs";
    case circuit::Policy::Kind::QuantumBasic: return "qbs";
    case circuit::Policy::Kind::Fixed: return circuit::describe(policy.fixed);
  }
  return "?";
}

namespace {

double sigma_delta(const circuit::PayoffStats& s, double expected) {
  const double se = s.std_error();
  const double diff = s.mean() - expected;
  if (se == 0.0) return std::abs(diff) < 1e-12 ? 0.0 : std::copysign(INFINITY, diff);
  return diff / se;
}

}  // namespace

nlohmann::json simulation_json(const circuit::MonteCarloSpec& spec, const circuit::MonteCarloResult& result) {
  const auto stats_json = [](const circuit::PayoffStats& s, double oracle) {
    return nlohmann::json{{"hands", s.n()},
                          {"mean", s.mean()},
                          {"std_error", s.std_error()},
                          {"oracle", oracle},
                          {"delta_sigma", sigma_delta(s, oracle)},
                          {"counts", {{"loss", s.counts[0]}, {"push", s.counts[1]}, {"win", s.counts[2]}}}};
  };
  nlohmann::json rows = nlohmann::json::array();
  for (int row = 1; row <= 16; ++row) {
    const circuit::PayoffStats& s = result.per_row[static_cast<std::size_t>(row - 1)];
    if (s.n() == 0) continue;
    nlohmann::json r = stats_json(s, oracle_row_payoff(spec.policy, row, spec.params));
    r["row"] = row;
    r["strategy"] = circuit::describe(spec.policy.choose(row, spec.params));
    rows.push_back(r);
  }
  return {{"gamma", angle_json(spec.params.gamma())},
          {"theta", angle_json(spec.params.theta())},
          {"policy", policy_name(spec.policy)},
          {"mode", spec.mode == circuit::CollapseMode::Faithful ? "faithful" : "early_collapse"},
          {"seed", spec.seed},
          {"overall", stats_json(result.overall, oracle_expectation(spec))},
          {"rows", rows},
          {"retries", result.retries},
          {"control_measurements", result.draws}};
}

std::string render_simulation(const circuit::MonteCarloSpec& spec, const circuit::MonteCarloResult& result) {
  std::string out = fmt::format(
      "policy {}, gamma = {}, theta = {}, mode {}, seed {}\n", policy_name(spec.policy), spec.params.gamma().label(),
      spec.params.theta().label(), spec.mode == circuit::CollapseMode::Faithful ? "faithful" : "early_collapse",
      spec.seed);
  const double oracle = oracle_expectation(spec);
  const circuit::PayoffStats& all = result.overall;
  out += fmt::format("hands {}  mean {:+.5f} +/- {:.5f} ({})  oracle {:+.5f}  delta {:+.2f} sigma\n", all.n(),
                     all.mean(), all.std_error(), percent(all.mean()), oracle, sigma_delta(all, oracle));
  out += fmt::format("retries {}  control measurements {}\n\n", result.retries, result.draws);

  Grid grid{{"row", "strategy", "hands", "mean", "std_error", "oracle", "delta_sigma"}};
  for (int row = 1; row <= 16; ++row) {
    const circuit::PayoffStats& s = result.per_row[static_cast<std::size_t>(row - 1)];
    if (s.n() == 0) continue;
    const double expected = oracle_row_payoff(spec.policy, row, spec.params);
    grid.push_back({std::to_string(row), circuit::describe(spec.policy.choose(row, spec.params)),
                    std::to_string(s.n()), fmt::format("{:+.5f}", s.mean()), fmt::format("{:.5f}", s.std_error()),
                    fmt::format("{:+.5f}", expected), fmt::format("{:+.2f}", sigma_delta(s, expected))});
  }
  return out + render_columns(grid);
}

}  // namespace snackjack::interface
