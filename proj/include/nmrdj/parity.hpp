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
#include <vector>

#include "nmrdj/matrix.hpp"

namespace nmrdj {

/// Bit of qubit i (1-based) in basis index x: qubit 1 is the most
/// significant bit, matching the kron_chain factor order.
inline int qubit_bit(std::uint64_t x, int qubit, int n) {
  return static_cast<int>((x >> (n - qubit)) & 1u);
}

/// Product of (-1)^{x_i} over the support qubits; +1 for empty support.
int parity_sign(std::uint64_t x, const std::vector<int>& support, int n);

/// The +/-1 diagonal of an f-dependent phase operator in the 2^n
/// computational basis. Entries are stored exactly as integers.
class DiagonalSignOperator {
 public:
  DiagonalSignOperator(int n, std::vector<int> signs);

  int num_qubits() const { return n_; }
  const std::vector<int>& signs() const { return signs_; }
  std::size_t dim() const { return signs_.size(); }

  /// Sum of the diagonal; 2^n in magnitude for constant-class operators,
  /// 0 for balanced-class ones.
  long long trace() const;

  CMatrix to_matrix() const;
  UnitaryMatrix to_unitary() const;

  bool operator==(const DiagonalSignOperator& other) const = default;

 private:
  int n_;
  std::vector<int> signs_;
};

/// One term of a product-operator (Walsh) decomposition: a real coefficient
/// on the parity character of a qubit subset. Coefficients of a +/-1
/// diagonal are dyadic rationals, exact in double precision.
struct ParityTerm {
  std::vector<int> support;  // sorted, distinct qubits; empty = identity term
  double coefficient = 0.0;

  bool operator==(const ParityTerm& other) const = default;
};

/// exp(i theta * Z_S) with Z_S the tensor product of Pauli-z over the
/// (nonempty) support: eigenvalue at basis state x is
/// exp(i theta * prod_{i in S} (-1)^{x_i}).
struct ParityPhaseGate {
  std::vector<int> support;
  double angle = 0.0;  // theta, radians
};

/// Dense unitary of a parity-phase gate on an n-qubit register.
/// Throws std::invalid_argument if the support is empty, unsorted,
/// duplicated, or out of 1..n.
UnitaryMatrix parity_phase_unitary(const ParityPhaseGate& gate, int n);

/// Product-operator spectrum of a sign diagonal: all subsets S with
/// c_S = 2^-n sum_x signs[x] * prod_{i in S}(-1)^{x_i} nonzero.
/// Terms are sorted by (support size, support lexicographic). The
/// reconstruction below inverts this exactly.
std::vector<ParityTerm> walsh_transform(const DiagonalSignOperator& d);

/// Inverse of walsh_transform: signs[x] = sum_S c_S * parity_sign(x, S).
/// Throws std::invalid_argument on duplicate supports and
/// std::runtime_error if any reconstructed entry deviates from +/-1 by
/// more than 1e-9 (the terms were not a valid sign-diagonal spectrum).
DiagonalSignOperator walsh_reconstruct(const std::vector<ParityTerm>& terms,
                                       int n);

}  // namespace nmrdj
