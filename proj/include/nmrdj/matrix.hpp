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

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace nmrdj {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using Mat2 = Eigen::Matrix2cd;

// Dense matrices are capped at MAX_QUBITS (2^12 x 2^12 complex ~ 256 MB).
inline constexpr int MAX_QUBITS = 12;

// Sup-norm tolerance for floating unitary comparisons.
inline constexpr double UNITARY_TOL = 1e-12;

Mat2 identity2();
Mat2 pauli_x();
Mat2 pauli_y();
Mat2 pauli_z();

/// Largest absolute entry of a matrix (sup norm).
double sup_norm(const CMatrix& m);

/// Entrywise distance between two equally sized matrices, sup norm.
double sup_distance(const CMatrix& a, const CMatrix& b);

/// A 2^n x 2^n matrix known to be unitary. The constructor validates
/// U U^dag = I to within UNITARY_TOL and rejects dimensions that are not a
/// power of two in 1..MAX_QUBITS qubits.
class UnitaryMatrix {
 public:
  explicit UnitaryMatrix(CMatrix m);

  int num_qubits() const { return n_; }
  Eigen::Index dim() const { return mat_.rows(); }
  const CMatrix& matrix() const { return mat_; }

 private:
  int n_;
  CMatrix mat_;
};

/// Kronecker product of a list of 2x2 factors, left to right. Qubit 1 is the
/// first factor and the most significant bit of the basis index: for basis
/// state |x>, the bit of qubit i is bit (n - i) of x.
///
/// Every factor must itself be unitary; the product is then unitary by
/// construction. Throws std::invalid_argument on an empty list or a list
/// longer than MAX_QUBITS.
UnitaryMatrix kron_chain(const std::vector<Mat2>& single_qubit_ops);

/// Plain Kronecker product without the unitarity requirement, same qubit
/// ordering as kron_chain. Used for operator algebra (sums of products).
CMatrix kron_all(const std::vector<Mat2>& factors);

/// |tr(A^dag B)| / 2^n, in [0, 1]. Equals 1 exactly when A = e^{i phi} B.
/// Throws std::invalid_argument on dimension mismatch.
double global_phase_fidelity(const CMatrix& a, const CMatrix& b);
double global_phase_fidelity(const UnitaryMatrix& a, const UnitaryMatrix& b);

}  // namespace nmrdj
