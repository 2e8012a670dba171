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

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <nlohmann/json.hpp>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "snackjack/circuit.hpp"

namespace snackjack::interface {

class SessionNotFound : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// An action arrived in a phase that does not allow it.
class PhaseConflict : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

enum class Phase { AwaitingDeal, AwaitingStrategy, Resolved };

std::string_view phase_name(Phase p);

struct SessionState {
  std::string id;
  GameParams params;
  std::optional<GameParams> staged_params;  // applied at the next deal
  std::int64_t initial_bankroll = 0;
  std::int64_t bankroll = 0;
  Phase phase = Phase::AwaitingDeal;
  std::optional<Deal> deal;
  std::optional<circuit::GameRecord> last;
  std::size_t hands_played = 0;
};

struct StrategyOption {
  StrategyOp strategy;
  double payoff = 0.0;
  std::optional<QuadraticSurd> exact;
};

struct StrategyMenu {
  int row = 0;
  Deal deal;
  GameParams params;
  std::array<StrategyOption, 4> options;
  StrategySet hint;  // quantum basic strategy for this row
};

/// One player's table. Not thread-safe on its own; SessionManager
/// serializes access.
class Session {
 public:
  Session(std::string id, GameParams params, std::uint64_t seed, std::int64_t bankroll);

  const SessionState& state() const { return state_; }
  const std::vector<circuit::GameRecord>& history() const { return history_; }

  const Deal& deal();
  StrategyMenu strategies() const;
  const circuit::GameRecord& act(const circuit::StrategyChoice& strategy);
  void stage_params(const GameParams& params);

 private:
  SessionState state_;
  std::uint64_t seed_;
  Rng rng_;
  std::vector<circuit::GameRecord> history_;
};

class SessionManager {
 public:
  static constexpr std::int64_t kDefaultBankroll = 100;

  /// Seedless sessions draw their seed from std::random_device.
  std::string create(const GameParams& params, std::optional<std::uint64_t> seed = std::nullopt,
                     std::int64_t bankroll = kDefaultBankroll);

  SessionState deal(const std::string& id);
  StrategyMenu strategies(const std::string& id);
  circuit::GameRecord act(const std::string& id, const circuit::StrategyChoice& strategy);
  SessionState state(const std::string& id);
  std::vector<circuit::GameRecord> history(const std::string& id);
  SessionState stage_params(const std::string& id, const GameParams& params);
  std::size_t size() const;

 private:
  struct Slot {
    std::mutex mutex;
    std::unique_ptr<Session> session;
  };

  template <typename F>
  auto with_session(const std::string& id, F&& f);

  mutable std::mutex mutex_;
  std::map<std::string, std::shared_ptr<Slot>> sessions_;
  std::uint64_t next_token_ = 0;
};

nlohmann::json to_json(const SessionState& s);
nlohmann::json to_json(const StrategyMenu& m);

}  // namespace snackjack::interface
