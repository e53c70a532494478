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

#include "nmrdj/matrix.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace nmrdj {

namespace {

const Complex kI(0.0, 1.0);

int qubits_for_dim(Eigen::Index dim) {
  int n = 0;
  Eigen::Index d = 1;
  while (d < dim && n <= MAX_QUBITS) {
    d <<= 1;
    ++n;
  }
  if (d != dim || n < 1 || n > MAX_QUBITS) {
    throw std::invalid_argument("matrix dimension " + std::to_string(dim) +
                                " is not 2^n with n in 1.." +
                                std::to_string(MAX_QUBITS));
  }
  return n;
}

}  // namespace

Mat2 identity2() { return Mat2::Identity(); }

Mat2 pauli_x() {
  Mat2 m;
  m << 0, 1, 1, 0;
  return m;
}

Mat2 pauli_y() {
  Mat2 m;
  m << 0, -kI, kI, 0;
  return m;
}

Mat2 pauli_z() {
  Mat2 m;
  m << 1, 0, 0, -1;
  return m;
}

double sup_norm(const CMatrix& m) { return m.cwiseAbs().maxCoeff(); }

double sup_distance(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("sup_distance: shape mismatch");
  }
  return sup_norm(a - b);
}

UnitaryMatrix::UnitaryMatrix(CMatrix m) : mat_(std::move(m)) {
  if (mat_.rows() != mat_.cols()) {
    throw std::invalid_argument("UnitaryMatrix: matrix is not square");
  }
  n_ = qubits_for_dim(mat_.rows());
  CMatrix gram = mat_.adjoint() * mat_;
  gram -= CMatrix::Identity(mat_.rows(), mat_.cols());
  const double err = sup_norm(gram);
  if (err > UNITARY_TOL) {
    throw std::runtime_error("UnitaryMatrix: U^dag U deviates from I by " +
                             std::to_string(err));
  }
}

CMatrix kron_all(const std::vector<Mat2>& factors) {
  if (factors.empty()) {
    throw std::invalid_argument("kron_all: empty factor list");
  }
  if (factors.size() > static_cast<std::size_t>(MAX_QUBITS)) {
    throw std::invalid_argument("kron_all: more than MAX_QUBITS factors");
  }
  CMatrix acc = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) {
    const Mat2& f = factors[i];
    CMatrix next(acc.rows() * 2, acc.cols() * 2);
    for (Eigen::Index r = 0; r < acc.rows(); ++r) {
      for (Eigen::Index c = 0; c < acc.cols(); ++c) {
        next.block<2, 2>(2 * r, 2 * c) = acc(r, c) * f;
      }
    }
    acc.swap(next);
  }
  return acc;
}

UnitaryMatrix kron_chain(const std::vector<Mat2>& single_qubit_ops) {
  for (const Mat2& f : single_qubit_ops) {
    Mat2 gram = f.adjoint() * f - Mat2::Identity();
    if (gram.cwiseAbs().maxCoeff() > UNITARY_TOL) {
      throw std::invalid_argument("kron_chain: non-unitary 2x2 factor");
    }
  }
  return UnitaryMatrix(kron_all(single_qubit_ops));
}

double global_phase_fidelity(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != a.cols()) {
    throw std::invalid_argument("global_phase_fidelity: dimension mismatch");
  }
  const Complex tr = (a.adjoint() * b).trace();
  return std::abs(tr) / static_cast<double>(a.rows());
}

double global_phase_fidelity(const UnitaryMatrix& a, const UnitaryMatrix& b) {
  return global_phase_fidelity(a.matrix(), b.matrix());
}

}  // namespace nmrdj
