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

#include "snackjack/record_json.hpp"

#include "snackjack/errors.hpp"

namespace snackjack::circuit {

namespace {

nlohmann::json slot_list(DeckMask m) {
  nlohmann::json out = nlohmann::json::array();
  for (CardSlot s : m.slots()) out.push_back(s.index());
  return out;
}

CardSlot parse_slot(const nlohmann::json& j) {
  const int index = j.get<int>();
  if (index < 0 || index >= kDeckSize) throw ConfigurationError("card slot out of range");
  return CardSlot(index);
}

DeckMask parse_slots(const nlohmann::json& j) {
  Hand h;
  for (const auto& v : j) h.cards.push_back(parse_slot(v));
  return h.mask();
}

}  // namespace

void to_json(nlohmann::json& j, const GameRecord& r) {
  j = nlohmann::json{
      {"initial_class", r.initial_class},
      {"player_cards", {r.deal.player[0].index(), r.deal.player[1].index()}},
      {"dealer_upcard", r.deal.up.index()},
      {"player_final", slot_list(r.player_final)},
      {"dealer_final", slot_list(r.dealer_final)},
      {"control_outcomes", r.control_outcomes},
      {"retries", r.retries},
      {"strategy_outcome", std::string{static_cast<char>('0' + (r.strategy_outcome >> 1)),
                                       static_cast<char>('0' + (r.strategy_outcome & 1))}},
      {"payoff", r.payoff},
  };
}

void from_json(const nlohmann::json& j, GameRecord& r) {
  try {
    GameRecord out;
    const auto& cards = j.at("player_cards");
    if (cards.size() != 2) throw ConfigurationError("player_cards must list two slots");
    out.deal = Deal{{parse_slot(cards[0]), parse_slot(cards[1])}, parse_slot(j.at("dealer_upcard"))};
    out.initial_class = j.at("initial_class").get<int>();
    if (classify_initial(out.deal).row != out.initial_class) {
      throw ConfigurationError("initial_class does not match the dealt cards");
    }
    out.player_final = parse_slots(j.at("player_final"));
    out.dealer_final = parse_slots(j.at("dealer_final"));
    out.control_outcomes = j.at("control_outcomes").get<std::vector<int>>();
    out.retries = j.at("retries").get<int>();
    const auto bits = j.at("strategy_outcome").get<std::string>();
    if (bits.size() != 2 || (bits[0] != '0' && bits[0] != '1') || (bits[1] != '0' && bits[1] != '1')) {
      throw ConfigurationError("strategy_outcome must be two bits");
    }
    out.strategy_outcome = 2 * (bits[0] - '0') + (bits[1] - '0');
    out.payoff = j.at("payoff").get<int>();
    if (out.payoff < -1 || out.payoff > 1) throw ConfigurationError("payoff must be -1, 0 or 1");
    r = std::move(out);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigurationError(std::string("malformed game record: ") + e.what());
  } catch (const InvalidHand& e) {
    throw ConfigurationError(std::string("malformed game record: ") + e.what());
  } catch (const ClassificationError& e) {
    throw ConfigurationError(std::string("malformed game record: ") + e.what());
  }
}

}  // namespace snackjack::circuit
