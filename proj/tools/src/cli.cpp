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

#include "snackjack/interface/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fmt/format.h>
#include <fstream>
#include <iostream>

#include "snackjack/errors.hpp"
#include "snackjack/interface/acceptance.hpp"
#include "snackjack/interface/http_api.hpp"
#include "snackjack/interface/report.hpp"

namespace snackjack::interface {

namespace {

struct TablesArgs {
  bool classical = false;
  std::string gamma = "pi/2";
  std::string theta = "pi/2";
  std::string format = "text";
};

struct SweepArgs {
  int resolution = 65;
  std::string output = "-";
  std::string format = "csv";
};

struct SimulateArgs {
  std::string gamma = "0";
  std::string theta = "0";
  std::string policy;
  std::string strategy;
  int row = 0;
  std::int64_t hands = 100000;
  std::string mode = "faithful";
  std::uint64_t seed = 1;
  std::string format = "text";
};

struct VerifyArgs {
  bool quick = false;
  std::uint64_t seed = AcceptanceOptions{}.seed;
};

struct ServeArgs {
  std::string host = "127.0.0.1";
  int port = 0;
};

int port_from_environment() {
  const char* value = std::getenv(kPortEnvironment);
  if (value == nullptr || *value == '\0') return kDefaultPort;
  try {
    std::size_t used = 0;
    const int port = std::stoi(value, &used);
    if (used == std::string_view(value).size() && port > 0 && port < 65536) return port;
  } catch (const std::logic_error&) {
  }
  throw ConfigurationError(fmt::format("{}='{}' is not a port number", kPortEnvironment, value));
}

int run_tables(const TablesArgs& a, std::ostream& out) {
  const TableFormat format = parse_table_format(a.format);
  if (a.classical) {
    out << render_table(GameParams::classical(), StrategyMode::Classical, format);
  } else {
    out << render_table(GameParams(parse_angle(a.gamma), parse_angle(a.theta)), StrategyMode::Quantum, format);
  }
  return kExitOk;
}

int run_sweep(const SweepArgs& a, std::ostream& out) {
  const SweepGrid grid = sweep(a.resolution);
  std::string text;
  if (a.format == "csv") {
    text = render_sweep_csv(grid);
  } else if (a.format == "json") {
    text = sweep_json(grid).dump() + "\n";
  } else {
    throw ConfigurationError(fmt::format("unknown sweep format '{}'", a.format));
  }
  if (a.output == "-") {
    out << text;
    return kExitOk;
  }
  std::ofstream file(a.output, std::ios::binary);
  file << text;
  file.close();
  if (!file) throw std::runtime_error(fmt::format("cannot write '{}'", a.output));
  return kExitOk;
}

circuit::StrategyChoice parse_strategy_choice(const std::string& tag) {
  if (tag == "H" || tag == "h") return qsim::matrices::hadamard();
  return parse_strategy(tag);
}

int run_simulate(const SimulateArgs& a, std::ostream& out) {
  if (a.hands <= 0) throw ConfigurationError("-n must be positive");
  if (!a.policy.empty() && !a.strategy.empty()) throw ConfigurationError("--policy and --strategy are exclusive");
  circuit::MonteCarloSpec spec;
  spec.params = GameParams(parse_angle(a.gamma), parse_angle(a.theta));
  if (!a.strategy.empty()) {
    spec.policy = circuit::Policy::fixed_strategy(parse_strategy_choice(a.strategy));
  } else if (a.policy.empty() || a.policy == "qbs") {
    spec.policy = circuit::Policy::quantum_basic();
  } else if (a.policy == "cbs") {
    spec.policy = circuit::Policy::classical_basic();
  } else {
    throw ConfigurationError(fmt::format("unknown policy '{}'", a.policy));
  }
  if (a.mode == "faithful") {
    spec.mode = circuit::CollapseMode::Faithful;
  } else if (a.mode == "early" || a.mode == "early_collapse") {
    spec.mode = circuit::CollapseMode::EarlyCollapse;
  } else {
    throw ConfigurationError(fmt::format("unknown mode '{}'", a.mode));
  }
  if (a.row != 0) {
    if (a.row < 1 || a.row > 16) throw ConfigurationError("--row must be in 1..16");
    spec.row = a.row;
  }
  spec.seed = a.seed;
  spec.hands = a.hands;
  const circuit::MonteCarloResult result = circuit::monte_carlo(spec);
  if (a.format == "json") {
    out << simulation_json(spec, result).dump(2) << "\n";
  } else if (a.format == "text") {
    out << render_simulation(spec, result);
  } else {
    throw ConfigurationError(fmt::format("unknown format '{}'", a.format));
  }
  return kExitOk;
}

int run_verify(const VerifyArgs& a, std::ostream& out) {
  AcceptanceOptions options;
  options.quick = a.quick;
  options.seed = a.seed;
  const auto results = run_acceptance(options, [&](const CriterionResult& r) { out << format_result(r) << std::endl; });
  std::size_t passed = 0;
  for (const auto& r : results) passed += r.passed;
  out << fmt::format("{}/{} criteria passed\n", passed, results.size());
  return passed == results.size() ? kExitOk : kExitFailed;
}

int run_serve(const ServeArgs& a, std::ostream& out, std::ostream& err) {
  const int port = a.port != 0 ? a.port : port_from_environment();
  SessionManager sessions;
  out << fmt::format("listening on http://{}:{}", a.host, port) << std::endl;
  if (!serve(a.host, port, sessions)) {
    err << fmt::format("cannot listen on {}:{}\n", a.host, port);
    return kExitFailed;
  }
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Snackjack: exact tables, circuit simulation and a play server for quantum snackjack"};
  app.require_subcommand(1);

  TablesArgs tables;
  auto* tables_cmd = app.add_subcommand("tables", "Print the sixteen-row initial state table");
  tables_cmd->add_flag("--classical", tables.classical, "Classical table with CBS");
  tables_cmd->add_option("--gamma", tables.gamma, "Entanglement angle (radians or pi/k token)");
  tables_cmd->add_option("--theta", tables.theta, "Dealer axis angle (radians or pi/k token)");
  tables_cmd->add_option("--format", tables.format, "text, csv or json");

  SweepArgs sw;
  auto* sweep_cmd = app.add_subcommand("sweep", "Overall expectation over a (gamma, theta) grid");
  sweep_cmd->add_option("--resolution", sw.resolution, "Grid points per axis (>= 2)");
  sweep_cmd->add_option("-o,--output", sw.output, "Output file, '-' for stdout");
  sweep_cmd->add_option("--format", sw.format, "csv or json");

  SimulateArgs sim;
  auto* sim_cmd = app.add_subcommand("simulate", "Monte Carlo over the full circuit");
  sim_cmd->add_option("--gamma", sim.gamma, "Entanglement angle");
  sim_cmd->add_option("--theta", sim.theta, "Dealer axis angle");
  sim_cmd->add_option("--policy", sim.policy, "cbs or qbs (default qbs)");
  sim_cmd->add_option("--strategy", sim.strategy, "Fixed strategy I, X, Y, Z or H (Hadamard)");
  sim_cmd->add_option("--row", sim.row, "Deal only from this initial class (1..16)");
  sim_cmd->add_option("-n,--hands", sim.hands, "Number of hands");
  sim_cmd->add_option("--mode", sim.mode, "faithful or early_collapse");
  sim_cmd->add_option("--seed", sim.seed, "Master seed");
  sim_cmd->add_option("--format", sim.format, "text or json");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run the acceptance criteria");
  verify_cmd->add_flag("--quick", verify.quick, "Exact-table criteria only");
  verify_cmd->add_option("--seed", verify.seed, "Master seed for the statistical criteria");

  ServeArgs serve_args;
  auto* serve_cmd = app.add_subcommand("serve", "HTTP+JSON session service");
  serve_cmd->add_option("--host", serve_args.host, "Bind address");
  serve_cmd->add_option("--port", serve_args.port, fmt::format("Port (default ${} or {})", kPortEnvironment, kDefaultPort));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*tables_cmd) return run_tables(tables, out);
    if (*sweep_cmd) return run_sweep(sw, out);
    if (*sim_cmd) return run_simulate(sim, out);
    if (*verify_cmd) return run_verify(verify, out);
    if (*serve_cmd) return run_serve(serve_args, out, err);
  } catch (const ConfigurationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailed;
  }
  return kExitUsage;
}

}  // namespace snackjack::interface
