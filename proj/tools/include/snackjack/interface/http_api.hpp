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

#include <string>

#include "snackjack/interface/session.hpp"

namespace httplib {
class Server;
}

namespace snackjack::interface {

inline constexpr int kDefaultPort = 8080;
inline constexpr const char* kPortEnvironment = "SNACKJACK_PORT";
inline constexpr int kMaxSweepResolution = 257;

/// Registers the session and oracle endpoints:
///   POST /sessions                 {gamma, theta, seed?, bankroll?}
///   GET  /sessions/{id}
///   POST /sessions/{id}/deal
///   GET  /sessions/{id}/strategies
///   POST /sessions/{id}/act        {strategy}
///   GET  /sessions/{id}/history
///   PUT  /sessions/{id}/params     {gamma, theta}
///   GET  /tables?mode=&gamma=&theta=
///   GET  /sweep?resolution=
/// Errors are {"error": message} with 400, 404 or 409.
void install_routes(httplib::Server& server, SessionManager& sessions);

/// Blocks until the server stops. Returns false when the port cannot be bound.
bool serve(const std::string& host, int port, SessionManager& sessions);

}  // namespace snackjack::interface
