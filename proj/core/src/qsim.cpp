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

#include "snackjack/qsim.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <fmt/format.h>

#include "snackjack/errors.hpp"

namespace snackjack::qsim {

namespace matrices {

Matrix2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
Matrix2 pauli_x() { return {0.0, 1.0, 1.0, 0.0}; }
Matrix2 pauli_y() { return {0.0, Amplitude(0, -1), Amplitude(0, 1), 0.0}; }
Matrix2 pauli_z() { return {1.0, 0.0, 0.0, -1.0}; }
Matrix2 hadamard() {
  constexpr double r = std::numbers::sqrt2 / 2;
  return {r, r, r, -r};
}

Matrix4 kron(const Matrix2& a, const Matrix2& b) {
  Matrix4 out{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) out[(2 * i + k) * 4 + (2 * j + l)] = a[i * 2 + j] * b[k * 2 + l];
  return out;
}

namespace {
template <std::size_t N, class M>
M multiply_n(const M& a, const M& b) {
  M out{};
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t k = 0; k < N; ++k)
      for (std::size_t j = 0; j < N; ++j) out[i * N + j] += a[i * N + k] * b[k * N + j];
  return out;
}

template <std::size_t N, class M>
M dagger_n(const M& m) {
  M out{};
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) out[j * N + i] = std::conj(m[i * N + j]);
  return out;
}

template <std::size_t N, class M>
double defect_n(const M& m) {
  const M p = multiply_n<N>(m, dagger_n<N>(m));
  double worst = 0.0;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) worst = std::max(worst, std::abs(p[i * N + j] - (i == j ? 1.0 : 0.0)));
  return worst;
}
}  // namespace

Matrix2 multiply(const Matrix2& a, const Matrix2& b) { return multiply_n<2>(a, b); }
Matrix4 multiply(const Matrix4& a, const Matrix4& b) { return multiply_n<4>(a, b); }
Matrix2 dagger(const Matrix2& m) { return dagger_n<2>(m); }
Matrix4 dagger(const Matrix4& m) { return dagger_n<4>(m); }
double unitarity_defect(const Matrix2& m) { return defect_n<2>(m); }
double unitarity_defect(const Matrix4& m) { return defect_n<4>(m); }

}  // namespace matrices

SparseState::SparseState(BasisState initial, unsigned width) : width_(width) {
  if (width == 0 || width > 63) throw ConfigurationError("register width must be in 1..63");
  if ((initial >> width) != 0) throw ConfigurationError("initial basis state wider than register");
  entries_.push_back({initial, 1.0});
}

double SparseState::norm_squared() const {
  double n = 0.0;
  for (const Entry& e : entries_) n += std::norm(e.amplitude);
  return n;
}

Amplitude SparseState::amplitude(BasisState b) const {
  for (const Entry& e : entries_) {
    if (e.basis == b) return e.amplitude;
  }
  return 0.0;
}

void SparseState::check_qubit(unsigned q) const {
  if (q >= width_) throw ConfigurationError(fmt::format("qubit {} outside {}-qubit register", q, width_));
}

void SparseState::apply(const Gate& gate) {
  std::visit(
      [this](const auto& g) {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, OneQubitGate>) {
          apply_one(g);
        } else if constexpr (std::is_same_v<T, TwoQubitGate>) {
          apply_two(g);
        } else {
          apply_permutation(g);
        }
      },
      gate);
}

void SparseState::x(unsigned qubit) {
  check_qubit(qubit);
  const BasisState bit = BasisState{1} << qubit;
  for (Entry& e : entries_) e.basis ^= bit;
}

void SparseState::h(unsigned qubit) { apply_one({matrices::hadamard(), qubit}); }

void SparseState::merge_scratch() {
  std::sort(scratch_.begin(), scratch_.end(),
            [](const Entry& a, const Entry& b) { return a.basis < b.basis; });
  entries_.clear();
  for (std::size_t i = 0; i < scratch_.size();) {
    const BasisState b = scratch_[i].basis;
    Amplitude sum = 0.0;
    for (; i < scratch_.size() && scratch_[i].basis == b; ++i) sum += scratch_[i].amplitude;
    if (std::abs(sum) >= kPruneThreshold) entries_.push_back({b, sum});
  }
  if (entries_.size() > kSupportGuard) {
    throw InternalError(fmt::format("support grew to {} entries", entries_.size()));
  }
}

void SparseState::apply_one(const OneQubitGate& g) {
  check_qubit(g.target);
  if (matrices::unitarity_defect(g.matrix) > kUnitarityTolerance) {
    throw ConfigurationError("one-qubit gate matrix is not unitary");
  }
  const BasisState bit = BasisState{1} << g.target;
  const auto& m = g.matrix;
  if (m[1] == 0.0 && m[2] == 0.0) {
    for (Entry& e : entries_) e.amplitude *= (e.basis & bit) ? m[3] : m[0];
    return;
  }
  if (m[0] == 0.0 && m[3] == 0.0) {
    for (Entry& e : entries_) {
      e.amplitude *= (e.basis & bit) ? m[1] : m[2];
      e.basis ^= bit;
    }
    return;
  }
  scratch_.clear();
  for (const Entry& e : entries_) {
    const int col = (e.basis & bit) ? 1 : 0;
    const BasisState low = e.basis & ~bit;
    scratch_.push_back({low, m[col] * e.amplitude});
    scratch_.push_back({low | bit, m[2 + col] * e.amplitude});
  }
  merge_scratch();
}

void SparseState::apply_two(const TwoQubitGate& g) {
  check_qubit(g.first);
  check_qubit(g.second);
  if (g.first == g.second) throw ConfigurationError("two-qubit gate targets coincide");
  if (matrices::unitarity_defect(g.matrix) > kUnitarityTolerance) {
    throw ConfigurationError("two-qubit gate matrix is not unitary");
  }
  const BasisState hi = BasisState{1} << g.first;
  const BasisState lo = BasisState{1} << g.second;
  scratch_.clear();
  for (const Entry& e : entries_) {
    const int col = ((e.basis & hi) ? 2 : 0) | ((e.basis & lo) ? 1 : 0);
    const BasisState base = e.basis & ~(hi | lo);
    for (int row = 0; row < 4; ++row) {
      const Amplitude a = g.matrix[static_cast<std::size_t>(row * 4 + col)];
      if (a == 0.0) continue;
      scratch_.push_back({base | ((row & 2) ? hi : 0) | ((row & 1) ? lo : 0), a * e.amplitude});
    }
  }
  merge_scratch();
}

void SparseState::apply_permutation(const PredicatedPermutation& g) {
  BasisState touched = g.flips;
  if ((g.flips >> width_) != 0) throw ConfigurationError("flip mask outside register");
  for (const auto& [a, b] : g.swaps) {
    check_qubit(a);
    check_qubit(b);
    const BasisState pair = (BasisState{1} << a) | (BasisState{1} << b);
    if (a == b || (touched & pair) != 0) throw ConfigurationError("overlapping swap targets");
    touched |= pair;
  }
  const auto permute = [&g](BasisState s) {
    s ^= g.flips;
    for (const auto& [a, b] : g.swaps) {
      const BasisState x = ((s >> a) ^ (s >> b)) & 1u;
      s ^= (x << a) | (x << b);
    }
    return s;
  };
  for (Entry& e : entries_) {
    if (!g.predicate(e.basis)) continue;
    const BasisState next = permute(e.basis);
    if (!g.predicate(next)) {
      throw ConfigurationError("permutation predicate is not invariant under its own permutation");
    }
    e.basis = next;
  }
}

std::optional<unsigned> SparseState::common_value(const Field& f) const {
  if (entries_.empty()) return std::nullopt;
  const unsigned v = f.value(entries_.front().basis);
  for (const Entry& e : entries_) {
    if (f.value(e.basis) != v) return std::nullopt;
  }
  return v;
}

void SparseState::postselect(const Field& f, unsigned value, double probability) {
  if (!(probability > 0.0)) throw InternalError("postselect on a zero-probability outcome");
  const double scale = 1.0 / std::sqrt(probability);
  std::erase_if(entries_, [&](const Entry& e) { return f.value(e.basis) != value; });
  for (Entry& e : entries_) e.amplitude *= scale;
}

void SparseState::release_field(const Field& f) {
  for (Entry& e : entries_) e.basis &= ~f.mask();
  std::sort(entries_.begin(), entries_.end(),
            [](const Entry& a, const Entry& b) { return a.basis < b.basis; });
  const auto dup = std::adjacent_find(entries_.begin(), entries_.end(),
                                      [](const Entry& a, const Entry& b) { return a.basis == b.basis; });
  if (dup != entries_.end()) {
    throw InternalError(fmt::format("releasing field {} would merge distinct branches", f.name));
  }
}

std::vector<double> probe(const SparseState& state, const Field& f) {
  std::vector<double> table(std::size_t{1} << f.width, 0.0);
  for (const auto& e : state.entries()) table[f.value(e.basis)] += std::norm(e.amplitude);
  return table;
}

std::vector<double> probe(const SparseState& state, std::initializer_list<Field> fields) {
  unsigned total_width = 0;
  for (const Field& f : fields) total_width += f.width;
  std::vector<double> table(std::size_t{1} << total_width, 0.0);
  for (const auto& e : state.entries()) {
    std::size_t index = 0;
    for (const Field& f : fields) index = (index << f.width) | f.value(e.basis);
    table[index] += std::norm(e.amplitude);
  }
  return table;
}

unsigned measure(SparseState& state, const Field& f, Rng& rng) {
  const std::vector<double> table = probe(state, f);
  double total = 0.0;
  for (double p : table) total += p;
  if (!(total > 1e-300)) throw InternalError(fmt::format("measuring {}: every outcome has zero probability", f.name));
  const double r = uniform01(rng) * total;
  double acc = 0.0;
  unsigned outcome = 0;
  // Rounding at the top end falls through to the last nonzero outcome.
  for (unsigned v = 0; v < table.size(); ++v) {
    if (table[v] <= 0.0) continue;
    outcome = v;
    acc += table[v];
    if (r < acc) break;
  }
  state.postselect(f, outcome, table[outcome]);
  return outcome;
}

}  // namespace snackjack::qsim
