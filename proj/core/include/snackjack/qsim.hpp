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
#include <complex>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "snackjack/rng.hpp"

namespace snackjack::qsim {

using BasisState = std::uint64_t;
using Amplitude = std::complex<double>;
using Matrix2 = std::array<Amplitude, 4>;   // row-major
using Matrix4 = std::array<Amplitude, 16>;  // row-major, index 2*first + second

/// A contiguous run of qubits inside the register. Bit 0 of the field value
/// is the qubit at `offset`.
struct Field {
  std::string_view name;
  unsigned offset = 0;
  unsigned width = 0;

  constexpr BasisState mask() const { return ((BasisState{1} << width) - 1) << offset; }
  constexpr unsigned value(BasisState b) const {
    return static_cast<unsigned>((b & mask()) >> offset);
  }
  constexpr BasisState with(BasisState b, unsigned v) const {
    return (b & ~mask()) | ((BasisState{v} << offset) & mask());
  }
  constexpr unsigned qubit(unsigned i) const { return offset + i; }
};

/// Register layout of the game circuit, in the order
/// deck, deck copy, player hand, control, player strategy, dealer hand,
/// dealer strategy.
namespace layout {
inline constexpr Field kDeck{"deck", 0, 8};
inline constexpr Field kDeckCopy{"deck_copy", 8, 8};
inline constexpr Field kPlayerHand{"p_hand", 16, 8};
inline constexpr Field kControl{"control", 24, 3};
inline constexpr Field kPlayerStrategy{"p_strategy", 27, 1};
inline constexpr Field kDealerHand{"d_hand", 28, 8};
inline constexpr Field kDealerStrategy{"d_strategy", 36, 1};
inline constexpr unsigned kWidth = 37;
inline constexpr std::array<Field, 7> kFields{kDeck,         kDeckCopy,  kPlayerHand,    kControl,
                                              kPlayerStrategy, kDealerHand, kDealerStrategy};

/// Fields are pairwise disjoint and tile [0, kWidth).
constexpr bool is_valid() {
  BasisState seen = 0;
  unsigned bits = 0;
  for (const Field& f : kFields) {
    if ((seen & f.mask()) != 0) return false;
    seen |= f.mask();
    bits += f.width;
  }
  return bits == kWidth && seen == (BasisState{1} << kWidth) - 1;
}
static_assert(is_valid());
}  // namespace layout

struct OneQubitGate {
  Matrix2 matrix;
  unsigned target = 0;
};

struct TwoQubitGate {
  Matrix4 matrix;
  unsigned first = 0;   // high bit of the 2-qubit sub-index
  unsigned second = 0;  // low bit
};

/// On basis states satisfying `predicate`: flip the `flips` bits and swap each
/// bit pair. The predicate must be invariant under that map, which makes the
/// gate an involution and therefore unitary; apply() verifies this on the
/// support.
struct PredicatedPermutation {
  std::function<bool(BasisState)> predicate;
  std::vector<std::pair<unsigned, unsigned>> swaps;
  BasisState flips = 0;
};

using Gate = std::variant<OneQubitGate, TwoQubitGate, PredicatedPermutation>;

namespace matrices {
Matrix2 identity();
Matrix2 pauli_x();
Matrix2 pauli_y();
Matrix2 pauli_z();
Matrix2 hadamard();
Matrix4 kron(const Matrix2& a, const Matrix2& b);
Matrix2 multiply(const Matrix2& a, const Matrix2& b);
Matrix4 multiply(const Matrix4& a, const Matrix4& b);
Matrix2 dagger(const Matrix2& m);
Matrix4 dagger(const Matrix4& m);
double unitarity_defect(const Matrix2& m);  // max |(M M^dagger - I)_ij|
double unitarity_defect(const Matrix4& m);
}  // namespace matrices

/// Sparse state vector: the nonzero amplitudes over computational basis
/// states, unordered, one entry per basis state.
class SparseState {
 public:
  struct Entry {
    BasisState basis = 0;
    Amplitude amplitude;
  };

  static constexpr double kPruneThreshold = 1e-14;
  static constexpr double kUnitarityTolerance = 1e-10;
  static constexpr std::size_t kSupportGuard = 4096;

  explicit SparseState(BasisState initial = 0, unsigned width = layout::kWidth);

  unsigned width() const { return width_; }
  std::span<const Entry> entries() const { return entries_; }
  std::size_t support_size() const { return entries_.size(); }
  double norm_squared() const;
  Amplitude amplitude(BasisState b) const;

  /// Throws ConfigurationError for non-unitary matrices, targets outside the
  /// register, overlapping permutation bits or a predicate broken by its own
  /// permutation.
  void apply(const Gate& gate);

  void x(unsigned qubit);
  void h(unsigned qubit);

  /// The field's value when every supported basis state agrees on it.
  std::optional<unsigned> common_value(const Field& f) const;

  /// Keep only basis states whose field equals `value`, renormalizing by the
  /// given marginal probability.
  void postselect(const Field& f, unsigned value, double probability);

  /// Returns the field to |0...0> by discarding it. Legal only when the
  /// field is a function of the rest of the register on the support (no two
  /// entries merge); throws InternalError otherwise.
  void release_field(const Field& f);

 private:
  void apply_one(const OneQubitGate& g);
  void apply_two(const TwoQubitGate& g);
  void apply_permutation(const PredicatedPermutation& g);
  void check_qubit(unsigned q) const;
  void merge_scratch();

  unsigned width_;
  std::vector<Entry> entries_;
  std::vector<Entry> scratch_;
};

/// Born-rule sample of the field; collapses the state. Throws InternalError
/// when every outcome has numerically zero probability.
unsigned measure(SparseState& state, const Field& f, Rng& rng);

/// Marginal distribution of the field without collapse; size 2^width.
std::vector<double> probe(const SparseState& state, const Field& f);

/// Joint marginal over several fields; the first field supplies the most
/// significant bits of the table index.
std::vector<double> probe(const SparseState& state, std::initializer_list<Field> fields);

}  // namespace snackjack::qsim
