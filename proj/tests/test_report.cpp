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

#include <gtest/gtest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "snackjack/errors.hpp"
#include "snackjack/interface/report.hpp"

namespace snackjack::interface {
namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const GameParams kFull(Angle::pi_eighths(4), Angle::pi_eighths(4));

TEST(Report, ClassicalTableMatchesGolden) {
  const std::string golden = read_file(SNACKJACK_GOLDEN_DIR "/table2.txt");
  ASSERT_FALSE(golden.empty());
  EXPECT_EQ(render_table(GameParams::classical(), StrategyMode::Classical, TableFormat::Text), golden);
}

TEST(Report, EntangledTableMatchesGolden) {
  const std::string golden = read_file(SNACKJACK_GOLDEN_DIR "/table3.txt");
  ASSERT_FALSE(golden.empty());
  EXPECT_EQ(render_table(kFull, StrategyMode::Quantum, TableFormat::Text), golden);
  const GameParams decimal(parse_angle("1.5707963"), parse_angle("1.5707963"));
  EXPECT_EQ(render_table(decimal, StrategyMode::Quantum, TableFormat::Text), golden);
}

TEST(Report, ClassicalJsonHidesEntangledColumns) {
  const nlohmann::json t = table_json(GameParams::classical(), StrategyMode::Classical);
  EXPECT_EQ(t.at("mode"), "classical");
  EXPECT_EQ(t.at("total_cases"), 168);
  ASSERT_EQ(t.at("rows").size(), 16u);
  for (const auto& row : t.at("rows")) {
    EXPECT_FALSE(row.contains("e_00"));
    EXPECT_FALSE(row.contains("e_10"));
    EXPECT_FALSE(row.contains("payoffs"));
  }
  EXPECT_EQ(t.at("rows")[4].at("e_std").at("fraction"), "-8/15");
  EXPECT_EQ(t.at("rows")[13].at("e_hit").at("fraction"), "-17/20");
  EXPECT_EQ(t.at("overall").at("fraction"), "-1/60");
}

TEST(Report, QuantumJsonCarriesExactPayoffs) {
  const nlohmann::json t = table_json(kFull, StrategyMode::Quantum);
  const auto& row6 = t.at("rows")[5];
  EXPECT_EQ(row6.at("e_00").at("fraction"), "3/5");
  EXPECT_EQ(row6.at("payoffs").at("Y").at("fraction"), "3/5");
  EXPECT_EQ(row6.at("best"), nlohmann::json::parse(R"(["Y"])"));
  EXPECT_EQ(t.at("rows")[0].at("e_10").at("fraction"), "2/5");
  EXPECT_EQ(t.at("overall").at("fraction"), "43/420");
  EXPECT_EQ(t.at("gamma").at("label"), "pi/2");

  const nlohmann::json eighth = table_json(GameParams(Angle::pi_eighths(1), Angle::pi_eighths(4)), StrategyMode::Quantum);
  const auto& y = eighth.at("rows")[5].at("payoffs").at("Y");
  EXPECT_TRUE(y.contains("exact"));
  EXPECT_FALSE(y.contains("fraction"));
  EXPECT_NE(y.at("exact").get<std::string>().find("sqrt2"), std::string::npos);

  const nlohmann::json inexact = table_json(GameParams(Angle::from_radians(0.3), Angle::from_radians(0.9)),
                                            StrategyMode::Quantum);
  EXPECT_FALSE(inexact.at("rows")[5].at("payoffs").at("Y").contains("exact"));
  EXPECT_EQ(inexact.at("gamma").at("label"), "0.3");
}

TEST(Report, UnentangledQbsAliasesCbs) {
  const nlohmann::json classical = table_json(GameParams::classical(), StrategyMode::Classical);
  const nlohmann::json zero = table_json(GameParams(parse_angle("0"), parse_angle("0")), StrategyMode::Quantum);
  for (std::size_t i = 0; i < 16; ++i) {
    std::set<std::string> expected;
    for (const auto& s : classical.at("rows")[i].at("best")) {
      expected.insert(s.get<std::string>());
      expected.insert(s == "X" ? "Y" : "Z");
    }
    std::set<std::string> got;
    for (const auto& s : zero.at("rows")[i].at("best")) got.insert(s.get<std::string>());
    EXPECT_EQ(got, expected) << "row " << i + 1;
  }
}

TEST(Report, CsvTableQuotesCompositeFields) {
  const std::string csv = render_table(GameParams::classical(), StrategyMode::Classical, TableFormat::Csv);
  std::istringstream in(csv);
  std::string header, first;
  std::getline(in, header);
  std::getline(in, first);
  EXPECT_EQ(header, "row,player,up,E_std,E_hit,cases,CBS");
  EXPECT_EQ(first, "1,\"(2,0,0)\",2,1/5,1/5,2,\"I,X\"");
  EXPECT_THROW(parse_table_format("xml"), ConfigurationError);
}

TEST(Report, SweepCsvLayout) {
  const SweepGrid g = sweep(3);
  const std::string csv = render_sweep_csv(g);
  EXPECT_EQ(csv, render_sweep_csv(sweep(3)));
  std::istringstream in(csv);
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  ASSERT_EQ(lines.size(), 10u);
  EXPECT_EQ(lines[0], "gamma,theta,expectation");
  EXPECT_EQ(lines[1], "0,0,-0.016666666666666666");
  EXPECT_EQ(lines[2].substr(0, 2), "0,");  // theta varies fastest
  EXPECT_EQ(lines[9], "1.5707963267948966,1.5707963267948966,0.10238095238095238");
}

TEST(Report, SweepJsonShape) {
  const nlohmann::json j = sweep_json(sweep(2));
  EXPECT_EQ(j.at("resolution"), 2);
  ASSERT_EQ(j.at("values").size(), 2u);
  EXPECT_NEAR(j.at("values")[1][1].get<double>(), 43.0 / 420, 1e-15);
  EXPECT_NEAR(j.at("values")[1][0].get<double>(), -1.0 / 60, 1e-15);
}

TEST(Report, OracleExpectationForPolicies) {
  circuit::MonteCarloSpec spec;
  spec.params = kFull;
  spec.policy = circuit::Policy::quantum_basic();
  EXPECT_NEAR(oracle_expectation(spec), 43.0 / 420, 1e-15);
  spec.params = GameParams::classical();
  spec.policy = circuit::Policy::classical_basic();
  EXPECT_NEAR(oracle_expectation(spec), -1.0 / 60, 1e-15);
  spec.policy = circuit::Policy::fixed_strategy(qsim::matrices::hadamard());
  spec.row = 6;
  EXPECT_NEAR(oracle_expectation(spec), (-1.0 / 30 - 1.0 / 3) / 2, 1e-15);
  EXPECT_EQ(policy_name(spec.policy), "U");
}

TEST(Report, SimulationReportListsDeltas) {
  const circuit::MonteCarloSpec spec{kFull, circuit::Policy::fixed_strategy(StrategyOp::Y),
                                     circuit::CollapseMode::Faithful, 3, 2000, 6};
  const circuit::MonteCarloResult r = circuit::monte_carlo(spec);
  const std::string text = render_simulation(spec, r);
  EXPECT_NE(text.find("oracle +0.60000"), std::string::npos) << text;
  EXPECT_NE(text.find("delta_sigma"), std::string::npos);
  const nlohmann::json j = simulation_json(spec, r);
  EXPECT_EQ(j.at("overall").at("hands"), 2000);
  EXPECT_EQ(j.at("rows").size(), 1u);
  EXPECT_EQ(j.at("rows")[0].at("strategy"), "Y");
}

}  // namespace
}  // namespace snackjack::interface
