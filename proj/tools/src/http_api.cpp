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

#include "snackjack/interface/http_api.hpp"

#include <httplib.h>

#include <fmt/format.h>

#include "snackjack/errors.hpp"
#include "snackjack/interface/report.hpp"
#include "snackjack/record_json.hpp"

namespace snackjack::interface {

namespace {

using nlohmann::json;

void send(httplib::Response& res, int status, const json& body) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

template <typename F>
void guarded(httplib::Response& res, F&& f, int status = 200) {
  try {
    send(res, status, f());
  } catch (const SessionNotFound& e) {
    send(res, 404, {{"error", e.what()}});
  } catch (const PhaseConflict& e) {
    send(res, 409, {{"error", e.what()}});
  } catch (const ConfigurationError& e) {
    send(res, 400, {{"error", e.what()}});
  } catch (const json::exception& e) {
    send(res, 400, {{"error", fmt::format("malformed request: {}", e.what())}});
  }
}

json body_of(const httplib::Request& req) {
  if (req.body.empty()) return json::object();
  json j = json::parse(req.body);
  if (!j.is_object()) throw ConfigurationError("request body must be a JSON object");
  return j;
}

Angle angle_field(const json& j, const char* key, const char* fallback) {
  if (!j.contains(key)) return parse_angle(fallback);
  const json& v = j.at(key);
  if (v.is_number()) return Angle::from_radians(v.get<double>());
  if (v.is_string()) return parse_angle(v.get<std::string>());
  throw ConfigurationError(fmt::format("'{}' must be a number or an angle token", key));
}

GameParams params_of(const json& j) { return {angle_field(j, "gamma", "0"), angle_field(j, "theta", "0")}; }

std::string query(const httplib::Request& req, const char* key, const char* fallback) {
  return req.has_param(key) ? req.get_param_value(key) : fallback;
}

const std::string& id_of(const httplib::Request& req) { return req.path_params.at("id"); }

}  // namespace

void install_routes(httplib::Server& server, SessionManager& sessions) {
  server.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                              {"Access-Control-Allow-Methods", "GET, POST, PUT, OPTIONS"},
                              {"Access-Control-Allow-Headers", "Content-Type"}});
  server.Options(R"(/.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });

  server.Post("/sessions", [&](const httplib::Request& req, httplib::Response& res) {
    guarded(
        res,
        [&] {
          const json body = body_of(req);
          std::optional<std::uint64_t> seed;
          if (body.contains("seed")) seed = body.at("seed").get<std::uint64_t>();
          const std::int64_t bankroll = body.value("bankroll", SessionManager::kDefaultBankroll);
          const std::string id = sessions.create(params_of(body), seed, bankroll);
          return to_json(sessions.state(id));
        },
        201);
  });
  server.Get("/sessions/:id", [&](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] { return to_json(sessions.state(id_of(req))); });
  });
  server.Post("/sessions/:id/deal", [&](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] { return to_json(sessions.deal(id_of(req))); });
  });
  server.Get("/sessions/:id/strategies", [&](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] { return to_json(sessions.strategies(id_of(req))); });
  });
  server.Post("/sessions/:id/act", [&](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] {
      const json body = body_of(req);
      if (!body.contains("strategy") || !body.at("strategy").is_string()) {
        throw ConfigurationError("'strategy' must be one of I, X, Y, Z");
      }
      const StrategyOp s = parse_strategy(body.at("strategy").get<std::string>());
      const circuit::GameRecord rec = sessions.act(id_of(req), s);
      return json{{"record", rec}, {"session", to_json(sessions.state(id_of(req)))}};
    });
  });
  server.Get("/sessions/:id/history", [&](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] {
      json records = json::array();
      for (const auto& r : sessions.history(id_of(req))) records.push_back(r);
      return json{{"id", id_of(req)}, {"records", records}};
    });
  });
  server.Put("/sessions/:id/params", [&](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] { return to_json(sessions.stage_params(id_of(req), params_of(body_of(req)))); });
  });

  server.Get("/tables", [](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] {
      const std::string mode = query(req, "mode", "quantum");
      if (mode == "classical") return table_json(GameParams::classical(), StrategyMode::Classical);
      if (mode != "quantum") throw ConfigurationError("mode must be classical or quantum");
      const GameParams p(parse_angle(query(req, "gamma", "pi/2")), parse_angle(query(req, "theta", "pi/2")));
      return table_json(p, StrategyMode::Quantum);
    });
  });
  server.Get("/sweep", [](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] {
      int resolution = 0;
      try {
        resolution = std::stoi(query(req, "resolution", "33"));
      } catch (const std::logic_error&) {
        throw ConfigurationError("resolution must be an integer");
      }
      if (resolution > kMaxSweepResolution) {
        throw ConfigurationError(fmt::format("resolution must be at most {}", kMaxSweepResolution));
      }
      return sweep_json(sweep(resolution));
    });
  });
}

bool serve(const std::string& host, int port, SessionManager& sessions) {
  httplib::Server server;
  install_routes(server, sessions);
  return server.listen(host, port);
}

}  // namespace snackjack::interface
