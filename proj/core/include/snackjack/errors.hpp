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

#include <stdexcept>
#include <string>

namespace snackjack {

/// A hand that reuses a card slot or otherwise cannot exist.
class InvalidHand : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A deal whose rank combination is not one of the sixteen initial classes.
class ClassificationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Caller-supplied configuration that cannot be honored (non-unitary
/// matrix, angle out of range, malformed token).
class ConfigurationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Broken engine invariant: retry bound exceeded, unresolved support,
/// dirty ancilla. Always a bug or an astronomically unlikely event.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace snackjack
