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

#include "nmrdj/parity.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

namespace nmrdj {

namespace {

void check_register_size(int n) {
  if (n < 1 || n > MAX_QUBITS) {
    throw std::invalid_argument("qubit count " + std::to_string(n) +
                                " outside 1.." + std::to_string(MAX_QUBITS));
  }
}

// Support as a bit mask over basis-index positions: qubit i contributes
// bit (n - i), so parity against an index is a popcount of the AND.
std::uint64_t index_mask(const std::vector<int>& support, int n) {
  std::uint64_t mask = 0;
  int prev = 0;
  for (int q : support) {
    if (q < 1 || q > n) {
      throw std::invalid_argument("support qubit " + std::to_string(q) +
                                  " outside 1.." + std::to_string(n));
    }
    if (q <= prev) {
      throw std::invalid_argument("support must be sorted and distinct");
    }
    prev = q;
    mask |= std::uint64_t{1} << (n - q);
  }
  return mask;
}

std::vector<int> support_from_index_mask(std::uint64_t mask, int n) {
  std::vector<int> support;
  for (int q = 1; q <= n; ++q) {
    if ((mask >> (n - q)) & 1u) support.push_back(q);
  }
  return support;
}

}  // namespace

int parity_sign(std::uint64_t x, const std::vector<int>& support, int n) {
  check_register_size(n);
  const std::uint64_t mask = index_mask(support, n);
  return (std::popcount(x & mask) & 1) ? -1 : 1;
}

DiagonalSignOperator::DiagonalSignOperator(int n, std::vector<int> signs)
    : n_(n), signs_(std::move(signs)) {
  check_register_size(n_);
  if (signs_.size() != (std::size_t{1} << n_)) {
    throw std::invalid_argument("sign vector length must be 2^n");
  }
  for (int s : signs_) {
    if (s != 1 && s != -1) {
      throw std::invalid_argument("diagonal entries must be exactly +/-1");
    }
  }
}

long long DiagonalSignOperator::trace() const {
  long long t = 0;
  for (int s : signs_) t += s;
  return t;
}

CMatrix DiagonalSignOperator::to_matrix() const {
  CMatrix m = CMatrix::Zero(dim(), dim());
  for (std::size_t x = 0; x < dim(); ++x) {
    m(x, x) = static_cast<double>(signs_[x]);
  }
  return m;
}

UnitaryMatrix DiagonalSignOperator::to_unitary() const {
  return UnitaryMatrix(to_matrix());
}

UnitaryMatrix parity_phase_unitary(const ParityPhaseGate& gate, int n) {
  check_register_size(n);
  if (gate.support.empty()) {
    throw std::invalid_argument("parity_phase_unitary: empty support");
  }
  const std::uint64_t mask = index_mask(gate.support, n);
  const std::size_t dim = std::size_t{1} << n;
  CMatrix m = CMatrix::Zero(dim, dim);
  for (std::size_t x = 0; x < dim; ++x) {
    const double chi = (std::popcount(x & mask) & 1) ? -1.0 : 1.0;
    m(x, x) = std::polar(1.0, gate.angle * chi);
  }
  return UnitaryMatrix(std::move(m));
}

std::vector<ParityTerm> walsh_transform(const DiagonalSignOperator& d) {
  const int n = d.num_qubits();
  const std::size_t dim = d.dim();

  // In-place fast Walsh-Hadamard butterfly over the basis index. After the
  // pass, w[s] = sum_x signs[x] * (-1)^{popcount(s & x)}, an integer.
  std::vector<long long> w(d.signs().begin(), d.signs().end());
  for (std::size_t half = 1; half < dim; half <<= 1) {
    for (std::size_t block = 0; block < dim; block += 2 * half) {
      for (std::size_t i = block; i < block + half; ++i) {
        const long long a = w[i];
        const long long b = w[i + half];
        w[i] = a + b;
        w[i + half] = a - b;
      }
    }
  }

  std::vector<ParityTerm> terms;
  const double scale = 1.0 / static_cast<double>(dim);
  for (std::size_t s = 0; s < dim; ++s) {
    if (w[s] == 0) continue;
    terms.push_back({support_from_index_mask(s, n),
                     static_cast<double>(w[s]) * scale});
  }
  std::sort(terms.begin(), terms.end(),
            [](const ParityTerm& a, const ParityTerm& b) {
              if (a.support.size() != b.support.size()) {
                return a.support.size() < b.support.size();
              }
              return a.support < b.support;
            });
  return terms;
}

DiagonalSignOperator walsh_reconstruct(const std::vector<ParityTerm>& terms,
                                       int n) {
  check_register_size(n);
  std::set<std::vector<int>> seen;
  std::vector<std::uint64_t> masks;
  masks.reserve(terms.size());
  for (const ParityTerm& t : terms) {
    if (!seen.insert(t.support).second) {
      throw std::invalid_argument("walsh_reconstruct: duplicate support");
    }
    masks.push_back(index_mask(t.support, n));
  }

  const std::size_t dim = std::size_t{1} << n;
  std::vector<int> signs(dim);
  for (std::size_t x = 0; x < dim; ++x) {
    double v = 0.0;
    for (std::size_t t = 0; t < terms.size(); ++t) {
      const double chi = (std::popcount(x & masks[t]) & 1) ? -1.0 : 1.0;
      v += terms[t].coefficient * chi;
    }
    const double rounded = v >= 0.0 ? 1.0 : -1.0;
    if (std::abs(v - rounded) > 1e-9) {
      throw std::runtime_error(
          "walsh_reconstruct: entry " + std::to_string(v) +
          " is not a sign; terms are not a +/-1 decomposition");
    }
    signs[x] = v >= 0.0 ? 1 : -1;
  }
  return DiagonalSignOperator(n, std::move(signs));
}

}  // namespace nmrdj
