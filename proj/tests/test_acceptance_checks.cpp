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

#include "snackjack/interface/acceptance.hpp"

namespace snackjack::interface {
namespace {

TEST(AcceptanceChecks, ExactCriteriaPass) {
  for (const CriterionResult& r : {check_table2(), check_table3(), check_overall_expectations(),
                                   check_theta_zero_flatness(), check_ewl_closed_forms()}) {
    EXPECT_TRUE(r.passed) << format_result(r);
  }
}

TEST(AcceptanceChecks, MutatedPayoffFailsNamedCriterion) {
  std::array<reference::Row, 16> rows = reference::kRows;
  rows[4].e_std = "-7/15";
  const CriterionResult r = check_table2(rows);
  EXPECT_FALSE(r.passed);
  EXPECT_EQ(r.id, "table2_exactness");
  EXPECT_NE(r.detail.find("row 5 E_std -8/15 != -7/15"), std::string::npos) << r.detail;
  EXPECT_EQ(format_result(r).substr(0, 4), "FAIL");

  std::array<reference::Row, 16> q = reference::kRows;
  q[5].qbs = "I";
  const CriterionResult r3 = check_table3(q);
  EXPECT_FALSE(r3.passed);
  EXPECT_NE(r3.detail.find("row 6 QBS Y != I"), std::string::npos) << r3.detail;
}

TEST(AcceptanceChecks, StatisticalCriteriaOnSmallSamples) {
  for (const CriterionResult& r : {check_protocol_statistics(3, 5000), check_structural_invariants(3, 300),
                                   check_mode_equivalence(3, 2000)}) {
    EXPECT_TRUE(r.passed) << format_result(r);
  }
}

TEST(AcceptanceChecks, QuickRunCoversExactCriteria) {
  std::vector<std::string> seen;
  const auto results = run_acceptance({true, 1}, [&](const CriterionResult& r) { seen.push_back(r.id); });
  ASSERT_EQ(results.size(), 4u);
  EXPECT_EQ(seen, (std::vector<std::string>{"table2_exactness", "table3_exactness", "overall_expectations",
                                            "theta_zero_flatness"}));
  for (const auto& r : results) EXPECT_TRUE(r.passed) << format_result(r);
}

}  // namespace
}  // namespace snackjack::interface
