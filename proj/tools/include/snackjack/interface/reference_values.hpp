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

#include <array>
#include <string_view>

namespace snackjack::reference {

/// Published per-row values: E_std, E_hit, E_00, E_10 as fractions, the
/// case count, the classical argmax set and the argmax set at
/// gamma = theta = pi/2.
struct Row {
  int row;
  std::string_view ranks;  // (aces, twos, threes) of the player pair
  char up;
  std::string_view e_std;
  std::string_view e_hit;
  std::string_view e_00;
  std::string_view e_10;
  int cases;
  std::string_view cbs;
  std::string_view qbs;
};

inline constexpr std::array<Row, 16> kRows{{
    {1, "(2,0,0)", '2', "1/5", "1/5", "1/5", "2/5", 2, "I,X", "Z"},
    {2, "(2,0,0)", '3', "-2/5", "1/5", "-3/5", "1/10", 4, "X", "X"},
    {3, "(0,2,0)", 'A', "-3/5", "-3/5", "-1", "-3/5", 2, "I,X", "I,X,Z"},
    {4, "(0,2,0)", '3', "-1", "-2/5", "-1", "-2/5", 4, "X", "X,Z"},
    {5, "(0,0,2)", 'A', "-8/15", "-4/5", "-1/5", "-4/5", 12, "I", "Y"},
    {6, "(0,0,2)", '2', "-1/30", "-1/3", "3/5", "-1/5", 12, "I", "Y"},
    {7, "(0,0,2)", '3', "-2/5", "-7/15", "0", "-2/5", 12, "I", "Y"},
    {8, "(1,1,0)", 'A', "-4/5", "-4/5", "-4/5", "-4/5", 4, "I,X", "I,X,Y,Z"},
    {9, "(1,1,0)", '2', "3/5", "3/5", "4/5", "4/5", 4, "I,X", "Y,Z"},
    {10, "(1,1,0)", '3', "-1/20", "-1/20", "0", "0", 16, "I,X", "Y,Z"},
    {11, "(1,0,1)", 'A', "2/5", "-3/10", "2/5", "-3/10", 8, "I", "I,Y"},
    {12, "(1,0,1)", '2', "1", "1/2", "1", "4/5", 16, "I", "I,Y"},
    {13, "(1,0,1)", '3', "4/5", "1/30", "4/5", "1/10", 24, "I", "I,Y"},
    {14, "(0,1,1)", 'A', "-4/5", "-17/20", "-4/5", "-17/20", 16, "I", "I,Y"},
    {15, "(0,1,1)", '2', "-2/5", "-2/5", "-2/5", "-3/10", 8, "I,X", "Z"},
    {16, "(0,1,1)", '3', "-4/5", "-13/30", "-4/5", "-2/5", 24, "X", "Z"},
}};

inline constexpr int kTotalCases = 168;

/// Overall player expectations. The classical value is -2.8/168 summed from
/// the published rows; the two entangled values were computed by exact
/// enumeration and checked against the one-decimal published percentages.
inline constexpr std::string_view kClassicalExpectation = "-1/60";
inline constexpr std::string_view kFullEntangledExpectation = "43/420";  // gamma = theta = pi/2
inline constexpr std::string_view kHalfEntangledExpectation = "1/56";    // gamma = pi/4, theta = pi/2

inline constexpr double kClassicalPercent = -1.7;
inline constexpr double kFullEntangledPercent = 10.2;
inline constexpr double kHalfEntangledPercent = 1.8;

}  // namespace snackjack::reference
