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

#include "snackjack/errors.hpp"
#include "snackjack/record_json.hpp"

namespace snackjack::circuit {
namespace {

TEST(RecordJson, RoundTrip) {
  const GameParams p(Angle::pi_eighths(4), Angle::pi_eighths(4));
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const GameRecord r = replay(GameConfig{p, StrategyOp::Z, CollapseMode::Faithful, seed});
    const nlohmann::json j = r;
    EXPECT_EQ(j.at("strategy_outcome").get<std::string>().size(), 2u);
    EXPECT_EQ(j.get<GameRecord>(), r);
    EXPECT_EQ(nlohmann::json::parse(j.dump()).get<GameRecord>(), r);
  }
}

TEST(RecordJson, Layout) {
  GameRecord r;
  r.deal = Deal{{CardSlot(0), CardSlot(4)}, CardSlot(2)};
  r.initial_class = classify_initial(r.deal).row;
  r.player_final = r.deal.player_mask();
  r.dealer_final = DeckMask(0b01000100);
  r.control_outcomes = {6};
  r.strategy_outcome = 0b01;
  r.payoff = 1;
  const nlohmann::json j = r;
  EXPECT_EQ(j.at("initial_class"), 12);
  EXPECT_EQ(j.at("player_final"), nlohmann::json::parse("[0,4]"));
  EXPECT_EQ(j.at("dealer_final"), nlohmann::json::parse("[2,6]"));
  EXPECT_EQ(j.at("strategy_outcome"), "01");
}

TEST(RecordJson, MalformedInputIsConfigurationError) {
  const GameRecord r = replay(GameConfig{GameParams::classical(), StrategyOp::X, CollapseMode::Faithful, 1});
  const nlohmann::json good = r;
  const auto broken = [&](auto&& edit) {
    nlohmann::json j = good;
    edit(j);
    return j;
  };
  EXPECT_THROW(broken([](auto& j) { j.erase("payoff"); }).get<GameRecord>(), ConfigurationError);
  EXPECT_THROW(broken([](auto& j) { j["payoff"] = 3; }).get<GameRecord>(), ConfigurationError);
  EXPECT_THROW(broken([](auto& j) { j["strategy_outcome"] = "2x"; }).get<GameRecord>(), ConfigurationError);
  EXPECT_THROW(broken([](auto& j) { j["player_cards"] = {1}; }).get<GameRecord>(), ConfigurationError);
  EXPECT_THROW(broken([](auto& j) { j["dealer_upcard"] = 12; }).get<GameRecord>(), ConfigurationError);
  EXPECT_THROW(broken([](auto& j) { j["player_final"] = {3, 3}; }).get<GameRecord>(), ConfigurationError);
  EXPECT_THROW(broken([](auto& j) { j["retries"] = "many"; }).get<GameRecord>(), ConfigurationError);
  EXPECT_THROW(broken([](auto& j) { j["initial_class"] = j["initial_class"].template get<int>() % 16 + 1; })
                   .get<GameRecord>(),
               ConfigurationError);
}

}  // namespace
}  // namespace snackjack::circuit
