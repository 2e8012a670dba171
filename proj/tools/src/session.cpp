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

#include "snackjack/interface/session.hpp"

#include <fmt/format.h>
#include <random>

#include "snackjack/interface/report.hpp"
#include "snackjack/record_json.hpp"

namespace snackjack::interface {

std::string_view phase_name(Phase p) {
  switch (p) {
    case Phase::AwaitingDeal: return "awaiting_deal";
    case Phase::AwaitingStrategy: return "awaiting_strategy";
    case Phase::Resolved: return "resolved";
  }
  return "?";
}

Session::Session(std::string id, GameParams params, std::uint64_t seed, std::int64_t bankroll)
    : seed_(seed), rng_(seed) {
  state_.id = std::move(id);
  state_.params = params;
  state_.initial_bankroll = bankroll;
  state_.bankroll = bankroll;
}

const Deal& Session::deal() {
  if (state_.phase == Phase::AwaitingStrategy) throw PhaseConflict("a hand is already dealt");
  if (state_.staged_params) {
    state_.params = *state_.staged_params;
    state_.staged_params.reset();
  }
  state_.deal = circuit::deal_initial(rng_).deal;
  state_.phase = Phase::AwaitingStrategy;
  return *state_.deal;
}

StrategyMenu Session::strategies() const {
  if (state_.phase != Phase::AwaitingStrategy) throw PhaseConflict("no hand awaiting a strategy");
  StrategyMenu menu;
  menu.deal = *state_.deal;
  menu.row = classify_initial(menu.deal).row;
  menu.params = state_.params;
  const PayoffQuadruple& q = payoff_table()[static_cast<std::size_t>(menu.row - 1)];
  const auto values = ewl_payoffs(q, state_.params);
  const auto exact = ewl_payoffs_exact(q, state_.params);
  for (StrategyOp s : kAllStrategies) {
    const auto i = static_cast<std::size_t>(s);
    menu.options[i] = {s, values[i], exact ? std::optional((*exact)[i]) : std::nullopt};
  }
  menu.hint = best_strategies(menu.row, state_.params, StrategyMode::Quantum);
  return menu;
}

const circuit::GameRecord& Session::act(const circuit::StrategyChoice& strategy) {
  if (state_.phase != Phase::AwaitingStrategy) throw PhaseConflict("no hand awaiting a strategy");
  const circuit::GameConfig config{state_.params, strategy, circuit::CollapseMode::Faithful, seed_};
  history_.push_back(circuit::play_dealt(config, *state_.deal, rng_));
  const circuit::GameRecord& rec = history_.back();
  state_.bankroll += rec.payoff;
  state_.last = rec;
  ++state_.hands_played;
  state_.phase = Phase::Resolved;
  return rec;
}

void Session::stage_params(const GameParams& params) {
  if (state_.phase == Phase::AwaitingStrategy) {
    state_.staged_params = params;
  } else {
    state_.params = params;
    state_.staged_params.reset();
  }
}

template <typename F>
auto SessionManager::with_session(const std::string& id, F&& f) {
  std::shared_ptr<Slot> slot;
  {
    const std::lock_guard lock(mutex_);
    const auto it = sessions_.find(id);
    if (it == sessions_.end()) throw SessionNotFound(fmt::format("unknown session '{}'", id));
    slot = it->second;
  }
  const std::lock_guard lock(slot->mutex);
  return f(*slot->session);
}

std::string SessionManager::create(const GameParams& params, std::optional<std::uint64_t> seed,
                                   std::int64_t bankroll) {
  const std::uint64_t s = seed ? *seed : (std::uint64_t{std::random_device{}()} << 32) ^ std::random_device{}();
  auto slot = std::make_shared<Slot>();
  const std::lock_guard lock(mutex_);
  std::string id = fmt::format("s{:04}-{:08x}", ++next_token_, std::random_device{}());
  slot->session = std::make_unique<Session>(id, params, s, bankroll);
  sessions_.emplace(id, std::move(slot));
  return id;
}

SessionState SessionManager::deal(const std::string& id) {
  return with_session(id, [](Session& s) {
    s.deal();
    return s.state();
  });
}

StrategyMenu SessionManager::strategies(const std::string& id) {
  return with_session(id, [](Session& s) { return s.strategies(); });
}

circuit::GameRecord SessionManager::act(const std::string& id, const circuit::StrategyChoice& strategy) {
  return with_session(id, [&](Session& s) { return s.act(strategy); });
}

SessionState SessionManager::state(const std::string& id) {
  return with_session(id, [](Session& s) { return s.state(); });
}

std::vector<circuit::GameRecord> SessionManager::history(const std::string& id) {
  return with_session(id, [](Session& s) { return s.history(); });
}

SessionState SessionManager::stage_params(const std::string& id, const GameParams& params) {
  return with_session(id, [&](Session& s) {
    s.stage_params(params);
    return s.state();
  });
}

std::size_t SessionManager::size() const {
  const std::lock_guard lock(mutex_);
  return sessions_.size();
}

namespace {

nlohmann::json params_json(const GameParams& p) {
  return {{"gamma", angle_json(p.gamma())}, {"theta", angle_json(p.theta())}};
}

nlohmann::json deal_json(const Deal& d) {
  const InitialStateClass& cls = classify_initial(d);
  return {{"row", cls.row},
          {"player_cards", {d.player[0].index(), d.player[1].index()}},
          {"player_ranks", {std::string(1, rank_symbol(d.player[0].rank())), std::string(1, rank_symbol(d.player[1].rank()))}},
          {"dealer_upcard", d.up.index()},
          {"dealer_up_rank", std::string(1, rank_symbol(d.up.rank()))}};
}

}  // namespace

nlohmann::json to_json(const SessionState& s) {
  nlohmann::json j{{"id", s.id},
                   {"params", params_json(s.params)},
                   {"bankroll", s.bankroll},
                   {"initial_bankroll", s.initial_bankroll},
                   {"phase", phase_name(s.phase)},
                   {"hands_played", s.hands_played}};
  j["staged_params"] = s.staged_params ? params_json(*s.staged_params) : nlohmann::json(nullptr);
  j["deal"] = s.deal ? deal_json(*s.deal) : nlohmann::json(nullptr);
  j["last"] = s.last ? nlohmann::json(*s.last) : nlohmann::json(nullptr);
  return j;
}

nlohmann::json to_json(const StrategyMenu& m) {
  nlohmann::json options = nlohmann::json::array();
  for (const StrategyOption& o : m.options) {
    nlohmann::json j = payoff_json(o.payoff, o.exact);
    j["strategy"] = std::string(1, strategy_tag(o.strategy));
    j["recommended"] = m.hint.contains(o.strategy);
    options.push_back(j);
  }
  nlohmann::json hint = nlohmann::json::array();
  for (StrategyOp s : kAllStrategies) {
    if (m.hint.contains(s)) hint.push_back(std::string(1, strategy_tag(s)));
  }
  return {{"row", m.row}, {"deal", deal_json(m.deal)}, {"params", params_json(m.params)},
          {"strategies", options}, {"hint", hint}};
}

}  // namespace snackjack::interface
