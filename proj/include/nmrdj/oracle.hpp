// Copyright 2026 The nmrdj Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nmrdj/parity.hpp"

namespace nmrdj {

/// Truth table of f: {0,1}^n -> {0,1}. Index x encodes the input with
/// qubit 1 as the most significant bit (the kron_chain convention).
class BooleanFunction {
 public:
  BooleanFunction(int n, std::vector<std::uint8_t> table);

  int num_bits() const { return n_; }
  const std::vector<std::uint8_t>& table() const { return table_; }
  std::uint8_t operator()(std::uint64_t x) const { return table_[x]; }
  std::size_t ones_count() const;

  /// Hex encoding of the table, MSB-first with x = 0 first: bit x lands in
  /// bit position (4*len - 1 - x) of the digit string. Tables shorter than
  /// one digit (n = 1) are padded with zeros at the low end.
  std::string to_hex() const;

  /// Inverse of to_hex. The bit count is 4 * digits rounded down to the
  /// enclosing power of two unless n is given explicitly (needed for n = 1,
  /// where one digit holds only two meaningful bits).
  static BooleanFunction from_hex(const std::string& hex, int n = 0);

  bool operator==(const BooleanFunction& other) const = default;

 private:
  int n_;
  std::vector<std::uint8_t> table_;
};

enum class FunctionClass { Constant, Balanced, Neither };

std::string to_string(FunctionClass c);

/// Constant iff 0 or 2^n ones; Balanced iff exactly 2^(n-1) ones.
FunctionClass classify(const BooleanFunction& f);

/// The f-dependent phase operator: signs[x] = (-1)^{f(x)}.
DiagonalSignOperator phase_oracle(const BooleanFunction& f);

/// The balanced n-bit family whose phase operator decomposes into four
/// parity terms: f(x) = x_{n-1} when x_n = 0 and x_1 ^ ... ^ x_{n-1} when
/// x_n = 1. Requires n >= 2.
BooleanFunction collins_family(int n);

/// The same family on an arbitrary ordered spin list: slot j of the
/// template acts on qubit ordered_qubits[j-1] of an n-qubit register.
/// Spins outside the list are identity. Requires at least two listed
/// qubits, all distinct and within 1..n.
DiagonalSignOperator collins_template_on(const std::vector<int>& ordered_qubits,
                                         int n);

/// Four-factor parity-phase product equal to the phase oracle of
/// collins_family(n), together with the scalar prefactor:
///   e^{i global_phase} * prod_j parity_phase_unitary(factors[j])
/// reproduces the oracle exactly. The last factor is the single-qubit
/// z term on qubit n-1.
struct Eq3Factorization {
  double global_phase = 0.0;
  std::vector<ParityPhaseGate> factors;
};

Eq3Factorization eq3_factorization(int n);

/// The nine seven-spin demonstration operators. Row ids f1..f9; each row
/// carries an explicit spin permutation onto the canonical qubit order
/// (C1,C2,C3,C4,H1,H2,H3) = (1..7).
struct Table1Id {
  int index = 0;  // 1..9

  static Table1Id parse(const std::string& name);  // "f1".."f9"
  std::string name() const;
};

inline constexpr int TABLE1_QUBITS = 7;

/// Canonical seven-spin labels, in chain/qubit order.
const std::vector<std::string>& table1_spin_labels();

/// Construct row id as a 7-qubit sign diagonal in canonical order and
/// verify its class trace test (f1 constant, f2..f9 balanced). A failed
/// trace test throws std::runtime_error.
DiagonalSignOperator table1_operator(const Table1Id& id);

/// The Boolean function realized by a sign diagonal: f(x) = (1-signs[x])/2.
BooleanFunction function_of(const DiagonalSignOperator& d);

}  // namespace nmrdj
