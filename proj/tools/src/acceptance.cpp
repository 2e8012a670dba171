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

#include "snackjack/interface/acceptance.hpp"

#include <boost/math/distributions/chi_squared.hpp>
#include <chrono>
#include <cmath>
#include <exception>
#include <fmt/format.h>
#include <numbers>

#include "snackjack/circuit.hpp"
#include "snackjack/errors.hpp"
#include "snackjack/ewl.hpp"
#include "snackjack/oracle.hpp"

namespace snackjack::interface {

namespace {

namespace L = qsim::layout;
using circuit::CollapseMode;
using circuit::MonteCarloSpec;
using circuit::Policy;

constexpr double kSigmas = 4.0;
constexpr double kAlpha = 1e-3;

struct Check {
  bool ok = true;
  std::vector<std::string> failures;

  void expect(bool condition, std::string message) {
    if (condition) return;
    ok = false;
    if (failures.size() < 5) failures.push_back(std::move(message));
  }
};

template <typename F>
CriterionResult timed(std::string id, F&& body) {
  const auto start = std::chrono::steady_clock::now();
  CriterionResult r;
  r.id = std::move(id);
  try {
    body(r);
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = fmt::format("exception: {}", e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

void finish(CriterionResult& r, const Check& c, std::string summary) {
  r.passed = c.ok;
  r.detail = std::move(summary);
  for (const std::string& f : c.failures) r.detail += "; " + f;
}

StrategySet parse_set(std::string_view text) {
  StrategySet out;
  for (char c : text) {
    if (c != ',') out.insert(parse_strategy(std::string_view(&c, 1)));
  }
  return out;
}

double chi_square_critical(int dof) {
  const boost::math::chi_squared dist(dof);
  return boost::math::quantile(boost::math::complement(dist, kAlpha));
}

const GameParams kFull(Angle::pi_eighths(4), Angle::pi_eighths(4));
const GameParams kHalf(Angle::pi_eighths(2), Angle::pi_eighths(4));

}  // namespace

CriterionResult check_table2(ReferenceRows rows) {
  return timed("table2_exactness", [&](CriterionResult& r) {
    Check c;
    int cases = 0;
    const auto cbs = basic_strategy(GameParams::classical(), StrategyMode::Classical);
    for (const reference::Row& ref : rows) {
      const InitialStateClass& cls = initial_class(ref.row);
      const PayoffQuadruple q = enumerate_quadruple(cls);
      c.expect(q.e_std == parse_rational(std::string(ref.e_std)),
               fmt::format("row {} E_std {} != {}", ref.row, to_string(q.e_std), ref.e_std));
      c.expect(q.e_hit == parse_rational(std::string(ref.e_hit)),
               fmt::format("row {} E_hit {} != {}", ref.row, to_string(q.e_hit), ref.e_hit));
      c.expect(cls.cases == ref.cases, fmt::format("row {} cases {} != {}", ref.row, cls.cases, ref.cases));
      const StrategySet got = cbs[static_cast<std::size_t>(ref.row - 1)];
      c.expect(got == parse_set(ref.cbs), fmt::format("row {} CBS {} != {}", ref.row, got.to_string(), ref.cbs));
      cases += cls.cases;
    }
    c.expect(cases == reference::kTotalCases, fmt::format("cases sum {}", cases));
    finish(r, c, fmt::format("16 rows E_std/E_hit/CBS, cases sum {}", cases));
  });
}

CriterionResult check_table3(ReferenceRows rows) {
  return timed("table3_exactness", [&](CriterionResult& r) {
    Check c;
    const auto qbs = basic_strategy(kFull, StrategyMode::Quantum);
    for (const reference::Row& ref : rows) {
      const PayoffQuadruple q = enumerate_quadruple(initial_class(ref.row));
      c.expect(q.e_00 == parse_rational(std::string(ref.e_00)),
               fmt::format("row {} E_00 {} != {}", ref.row, to_string(q.e_00), ref.e_00));
      c.expect(q.e_10 == parse_rational(std::string(ref.e_10)),
               fmt::format("row {} E_10 {} != {}", ref.row, to_string(q.e_10), ref.e_10));
      const StrategySet got = qbs[static_cast<std::size_t>(ref.row - 1)];
      c.expect(got == parse_set(ref.qbs), fmt::format("row {} QBS {} != {}", ref.row, got.to_string(), ref.qbs));
    }
    finish(r, c, "16 rows E_00/E_10/QBS at gamma = theta = pi/2");
  });
}

CriterionResult check_overall_expectations() {
  return timed("overall_expectations", [](CriterionResult& r) {
    Check c;
    struct Case {
      GameParams params;
      StrategyMode mode;
      std::string_view exact;
      double percent;
    };
    const Case cases[] = {
        {GameParams::classical(), StrategyMode::Classical, reference::kClassicalExpectation, reference::kClassicalPercent},
        {kFull, StrategyMode::Quantum, reference::kFullEntangledExpectation, reference::kFullEntangledPercent},
        {kHalf, StrategyMode::Quantum, reference::kHalfEntangledExpectation, reference::kHalfEntangledPercent},
    };
    std::vector<std::string> shown;
    for (const Case& k : cases) {
      const Expectation e = overall_expectation(k.params, k.mode);
      const std::string got = e.exact ? to_string(*e.exact) : fmt::format("{}", e.value);
      c.expect(e.exact && *e.exact == QuadraticSurd(parse_rational(std::string(k.exact))),
               fmt::format("exact {} != {}", got, k.exact));
      const double rounded = std::round(e.value * 1000) / 10;
      c.expect(std::abs(rounded - k.percent) < 1e-9, fmt::format("{:.1f}% != {:.1f}%", rounded, k.percent));
      shown.push_back(fmt::format("{} ({:+.1f}%)", got, rounded));
    }
    finish(r, c, fmt::format("classical {}, (pi/2, pi/2) {}, (pi/4, pi/2) {}", shown[0], shown[1], shown[2]));
  });
}

CriterionResult check_theta_zero_flatness() {
  return timed("theta_zero_flatness", [](CriterionResult& r) {
    Check c;
    const auto classical = overall_expectation(GameParams::classical(), StrategyMode::Classical).exact;
    c.expect(classical.has_value(), "classical value not exact");
    for (int k = 0; k <= 4; ++k) {
      const Expectation e = overall_expectation(GameParams(Angle::pi_eighths(k), Angle::pi_eighths(0)));
      c.expect(e.exact && classical && *e.exact == *classical,
               fmt::format("gamma = {}: {}", Angle::pi_eighths(k).label(), e.exact ? to_string(*e.exact) : "inexact"));
    }
    finish(r, c, fmt::format("gamma in {{0, pi/8, pi/4, 3pi/8, pi/2}} all equal {}",
                             classical ? to_string(*classical) : "?"));
  });
}

CriterionResult check_ewl_closed_forms() {
  return timed("ewl_closed_forms", [](CriterionResult& r) {
    Check c;
    namespace M = qsim::matrices;
    const qsim::Matrix4 ii = M::kron(M::identity(), M::identity());
    const qsim::Matrix4 xi = M::kron(M::pauli_x(), M::identity());
    double worst_state = 0, worst_identity = 0;
    for (int gi = 0; gi <= 8; ++gi) {
      for (int ti = 0; ti <= 8; ++ti) {
        const GameParams p(Angle::from_radians(gi * std::numbers::pi / 16), Angle::from_radians(ti * std::numbers::pi / 16));
        for (StrategyOp s : kAllStrategies) {
          const double d = ewl::phase_aligned_distance(ewl::strategy_post_state(s, p), ewl::closed_form_post_state(s, p));
          worst_state = std::max(worst_state, d);
          c.expect(d <= 1e-12, fmt::format("{} at ({}, {}) off by {:.3g}", strategy_tag(s), gi, ti, d));
        }
        const ewl::Entangler e = ewl::build_entangler(p);
        const double dx = ewl::max_abs_difference(ewl::conjugate(e, xi), xi);
        const double di = ewl::max_abs_difference(ewl::conjugate(e, ii), ii);
        worst_identity = std::max({worst_identity, dx, di});
        c.expect(dx <= 1e-12 && di <= 1e-12, fmt::format("identity defect {:.3g} at ({}, {})", std::max(dx, di), gi, ti));
      }
    }
    finish(r, c, fmt::format("9x9 grid, 4 strategies: max state error {:.2e}, max identity error {:.2e}", worst_state,
                             worst_identity));
  });
}

CriterionResult check_circuit_vs_oracle(std::uint64_t seed, std::int64_t hands_per_config) {
  return timed("circuit_vs_oracle", [&](CriterionResult& r) {
    Check c;
    const GameParams points[] = {GameParams::classical(), kFull, kHalf};
    double worst = 0;
    int configs = 0;
    for (const GameParams& p : points) {
      for (int row = 1; row <= 16; ++row) {
        const PayoffQuadruple& q = payoff_table()[static_cast<std::size_t>(row - 1)];
        const auto oracle = ewl_payoffs(q, p);
        for (StrategyOp s : kAllStrategies) {
          const MonteCarloSpec spec{p, Policy::fixed_strategy(s), CollapseMode::Faithful,
                                    seed + static_cast<std::uint64_t>(configs), hands_per_config, row};
          const circuit::MonteCarloResult m = circuit::monte_carlo(spec);
          const double expected = oracle[static_cast<std::size_t>(s)];
          const double diff = std::abs(m.overall.mean() - expected);
          const double se = m.overall.std_error();
          if (se > 0) worst = std::max(worst, diff / se);
          c.expect(diff <= kSigmas * se + 1e-12,
                   fmt::format("row {} {} at ({}, {}): {:+.5f} vs {:+.5f} (se {:.5f})", row, strategy_tag(s),
                               p.gamma().label(), p.theta().label(), m.overall.mean(), expected, se));
          ++configs;
        }
      }
    }
    finish(r, c, fmt::format("{} configs x {} hands, worst deviation {:.2f} sigma", configs, hands_per_config, worst));
  });
}

CriterionResult check_mode_equivalence(std::uint64_t seed, std::int64_t hands_per_config) {
  return timed("mode_equivalence", [&](CriterionResult& r) {
    Check c;
    const qsim::Amplitude i(0, 1);
    const circuit::StrategyChoice hadamard = qsim::matrices::hadamard();
    const circuit::StrategyChoice rotation = qsim::Matrix2{std::cos(0.6), i * std::sin(0.6), i * std::sin(0.6), std::cos(0.6)};
    struct Spot {
      int row;
      circuit::StrategyChoice strategy;
      GameParams params;
    };
    const Spot spots[] = {
        {6, StrategyOp::Y, kFull},
        {5, StrategyOp::Y, kHalf},
        {1, StrategyOp::Z, kFull},
        {16, StrategyOp::Z, GameParams(Angle::pi_eighths(2), Angle::pi_eighths(2))},
        {13, StrategyOp::X, kFull},
        {12, StrategyOp::I, kFull},
        {9, StrategyOp::Y, GameParams(Angle::from_radians(0.7), Angle::from_radians(1.1))},
        {10, StrategyOp::Z, GameParams(Angle::from_radians(1.2), Angle::from_radians(0.3))},
        {2, hadamard, GameParams::classical()},
        {15, StrategyOp::Y, GameParams(Angle::pi_eighths(3), Angle::pi_eighths(1))},
        {3, StrategyOp::Z, kFull},
        {7, rotation, kHalf},
    };
    double worst_p = 1.0;
    int index = 0;
    for (const Spot& s : spots) {
      const auto run = [&](CollapseMode mode, std::uint64_t stream) {
        return circuit::monte_carlo({s.params, Policy::fixed_strategy(s.strategy), mode, stream, hands_per_config, s.row});
      };
      const auto faithful = run(CollapseMode::Faithful, seed + 2 * static_cast<std::uint64_t>(index));
      const auto early = run(CollapseMode::EarlyCollapse, seed + 2 * static_cast<std::uint64_t>(index) + 1);
      double chi2 = 0;
      int columns = 0;
      const double n1 = static_cast<double>(faithful.overall.n());
      const double n2 = static_cast<double>(early.overall.n());
      for (std::size_t k = 0; k < 3; ++k) {
        const double a = static_cast<double>(faithful.overall.counts[k]);
        const double b = static_cast<double>(early.overall.counts[k]);
        if (a + b == 0) continue;
        ++columns;
        const double ea = (a + b) * n1 / (n1 + n2);
        const double eb = (a + b) * n2 / (n1 + n2);
        chi2 += (a - ea) * (a - ea) / ea + (b - eb) * (b - eb) / eb;
      }
      double p_value = 1.0;
      if (columns > 1) {
        const boost::math::chi_squared dist(columns - 1);
        p_value = boost::math::cdf(boost::math::complement(dist, chi2));
        c.expect(chi2 <= chi_square_critical(columns - 1),
                 fmt::format("row {} {} at ({}, {}): chi2 {:.2f}, p {:.2g}", s.row, circuit::describe(s.strategy),
                             s.params.gamma().label(), s.params.theta().label(), chi2, p_value));
      }
      worst_p = std::min(worst_p, p_value);
      ++index;
    }
    finish(r, c, fmt::format("{} spots x {} hands per mode, smallest p-value {:.3g}", index, hands_per_config, worst_p));
  });
}

CriterionResult check_protocol_statistics(std::uint64_t seed, int draws) {
  return timed("protocol_statistics", [&](CriterionResult& r) {
    Check c;
    Rng rng(seed);
    int retried = 0;
    for (int k = 0; k < draws; ++k) {
      const Deal deal = circuit::deal_initial(rng).deal;
      const qsim::BasisState start = L::kPlayerStrategy.with(circuit::encode(deal), 1);
      qsim::SparseState state(start);
      int rounds = 0;
      const circuit::Observer watch = [&](std::string_view stage, const qsim::SparseState&) {
        rounds += stage == "measure_control";
      };
      const circuit::DrawResult d =
          circuit::draw_round(state, circuit::Target::Player, circuit::gating::player_hit, rng, watch);
      c.expect(d.slot && deal.remaining().contains(*d.slot), "draw produced a card that was not in the deck");
      c.expect(rounds == d.retries + 1, "round count disagrees with retries");
      if (d.retries > 0) ++retried;
    }
    // Retried rounds must leave deck and hands untouched.
    Rng probe_rng(seed + 1);
    int checked = 0;
    for (int k = 0; k < 2000; ++k) {
      const Deal deal = circuit::deal_initial(probe_rng).deal;
      const qsim::BasisState start = L::kPlayerStrategy.with(circuit::encode(deal), 1);
      qsim::SparseState state(start);
      std::vector<qsim::BasisState> after;
      const circuit::Observer watch = [&](std::string_view stage, const qsim::SparseState& s) {
        if (stage == "measure_control") after.push_back(L::kControl.with(s.entries()[0].basis, 0));
      };
      circuit::draw_round(state, circuit::Target::Player, circuit::gating::player_hit, probe_rng, watch);
      for (std::size_t i = 0; i + 1 < after.size(); ++i) {
        c.expect(after[i] == start, "a retried round changed the deck or hand registers");
        ++checked;
      }
    }
    const double p = 3.0 / 8;
    const double freq = static_cast<double>(retried) / draws;
    const double sigma = std::sqrt(p * (1 - p) / draws);
    c.expect(std::abs(freq - p) <= kSigmas * sigma, fmt::format("retry frequency {:.5f} vs 0.375", freq));

    qsim::SparseState fresh(circuit::encode(Deal{{CardSlot(0), CardSlot(4)}, CardSlot(2)}));
    circuit::prepare_control(fresh);
    double worst = 0;
    for (double v : qsim::probe(fresh, L::kControl)) worst = std::max(worst, std::abs(v - 0.125));
    c.expect(worst <= 1e-15, fmt::format("control marginal off by {:.3g}", worst));
    finish(r, c, fmt::format("first-draw retry frequency {:.5f} ({:+.2f} sigma from 3/8) over {} draws; "
                             "control marginal max error {:.1e}; {} retried rounds left registers intact",
                             freq, (freq - p) / sigma, draws, worst, checked));
  });
}

CriterionResult check_structural_invariants(std::uint64_t seed, int hands) {
  return timed("structural_invariants", [&](CriterionResult& r) {
    Check c;
    std::mt19937_64 gen(seed);
    std::uniform_real_distribution<double> angle(0, std::numbers::pi / 2);
    std::uniform_real_distribution<double> phase(0, 2 * std::numbers::pi);
    double worst_drift = 0;
    std::size_t max_support = 0;
    int violations = 0;
    for (int h = 0; h < hands; ++h) {
      const GameParams p(Angle::from_radians(angle(gen)), Angle::from_radians(angle(gen)));
      circuit::StrategyChoice strategy = kAllStrategies[gen() % 4];
      if (gen() % 4 == 0) {
        const qsim::Amplitude i(0, 1);
        const double a = phase(gen), b = phase(gen), t = angle(gen);
        strategy = qsim::Matrix2{std::exp(i * a) * std::cos(t), std::exp(i * b) * std::sin(t),
                                 -std::exp(-i * b) * std::sin(t), std::exp(-i * a) * std::cos(t)};
      }
      const circuit::GameConfig config{p, strategy, CollapseMode::Faithful, gen()};
      double drift = 0;
      bool conserved = true;
      const circuit::Observer watch = [&](std::string_view, const qsim::SparseState& s) {
        drift = std::max(drift, std::abs(s.norm_squared() - 1.0));
        max_support = std::max(max_support, s.support_size());
        for (const auto& e : s.entries()) conserved = conserved && circuit::conserves_cards(e.basis);
      };
      Rng rng(config.seed);
      const circuit::GameRecord observed = circuit::play_hand(config, rng, watch);
      const circuit::GameRecord again = circuit::replay(config);
      worst_drift = std::max(worst_drift, drift);
      const bool ok = conserved && drift < 1e-9 && observed == again &&
                      (observed.player_final.bits() & observed.dealer_final.bits()) == 0;
      if (!ok) ++violations;
      c.expect(ok, fmt::format("hand {}: conserved {}, drift {:.2e}, replay {}", h, conserved, drift,
                               observed == again ? "same" : "differs"));
    }
    finish(r, c, fmt::format("{} hands: {} violations, max norm drift {:.2e}, max support {}", hands, violations,
                             worst_drift, max_support));
  });
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options, const ResultSink& sink) {
  std::vector<CriterionResult> results;
  const auto record = [&](CriterionResult r) {
    if (sink) sink(r);
    results.push_back(std::move(r));
  };
  const auto bounded = [](CriterionResult r, double limit) {
    if (r.passed && r.seconds >= limit) {
      r.passed = false;
      r.detail += fmt::format("; took {:.2f} s, limit {:.0f} s", r.seconds, limit);
    }
    return r;
  };
  record(bounded(check_table2(), 1.0));
  record(bounded(check_table3(), 1.0));
  record(bounded(check_overall_expectations(), 1.0));
  record(check_theta_zero_flatness());
  if (options.quick) return results;
  record(check_ewl_closed_forms());
  record(bounded(check_circuit_vs_oracle(options.seed), 600.0));
  record(check_mode_equivalence(options.seed + 1000));
  record(check_protocol_statistics(options.seed + 2000));
  record(check_structural_invariants(options.seed + 3000));
  return results;
}

std::string format_result(const CriterionResult& r) {
  return fmt::format("{}  {:<22} ({:.3f} s)  {}", r.passed ? "PASS" : "FAIL", r.id, r.seconds, r.detail);
}

}  // namespace snackjack::interface
