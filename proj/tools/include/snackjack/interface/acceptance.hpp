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
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "snackjack/interface/reference_values.hpp"

namespace snackjack::interface {

struct CriterionResult {
  std::string id;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

using ReferenceRows = std::span<const reference::Row, 16>;

CriterionResult check_table2(ReferenceRows rows = reference::kRows);
CriterionResult check_table3(ReferenceRows rows = reference::kRows);
CriterionResult check_overall_expectations();
CriterionResult check_theta_zero_flatness();
CriterionResult check_ewl_closed_forms();
CriterionResult check_circuit_vs_oracle(std::uint64_t seed, std::int64_t hands_per_config = 100000);
CriterionResult check_mode_equivalence(std::uint64_t seed, std::int64_t hands_per_config = 100000);
CriterionResult check_protocol_statistics(std::uint64_t seed, int draws = 100000);
CriterionResult check_structural_invariants(std::uint64_t seed, int hands = 10000);

struct AcceptanceOptions {
  bool quick = false;  // exact-table criteria only
  std::uint64_t seed = 20240517;
};

using ResultSink = std::function<void(const CriterionResult&)>;

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options, const ResultSink& sink = {});

/// "PASS  table2_exactness  (0.004 s)  detail"
std::string format_result(const CriterionResult& r);

}  // namespace snackjack::interface
