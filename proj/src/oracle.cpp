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

#include "nmrdj/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

namespace nmrdj {

namespace {

constexpr double kPi = std::numbers::pi;

int hex_digit_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  throw std::invalid_argument(std::string("invalid hex digit '") + c + "'");
}

// Sign diagonal of a plain Pauli-z product over the given qubits.
DiagonalSignOperator z_product(const std::vector<int>& support, int n) {
  const std::size_t dim = std::size_t{1} << n;
  std::vector<int> signs(dim);
  for (std::size_t x = 0; x < dim; ++x) {
    signs[x] = parity_sign(x, support, n);
  }
  return DiagonalSignOperator(n, std::move(signs));
}

}  // namespace

BooleanFunction::BooleanFunction(int n, std::vector<std::uint8_t> table)
    : n_(n), table_(std::move(table)) {
  if (n_ < 1 || n_ > MAX_QUBITS) {
    throw std::invalid_argument("BooleanFunction: n outside 1..12");
  }
  if (table_.size() != (std::size_t{1} << n_)) {
    throw std::invalid_argument("BooleanFunction: table length must be 2^n");
  }
  for (std::uint8_t b : table_) {
    if (b > 1) throw std::invalid_argument("BooleanFunction: non-bit entry");
  }
}

std::size_t BooleanFunction::ones_count() const {
  std::size_t ones = 0;
  for (std::uint8_t b : table_) ones += b;
  return ones;
}

std::string BooleanFunction::to_hex() const {
  const std::size_t bits = table_.size();
  const std::size_t digits = std::max<std::size_t>(1, bits / 4);
  std::string out(digits, '0');
  for (std::size_t x = 0; x < bits; ++x) {
    if (!table_[x]) continue;
    const std::size_t pos = digits * 4 - 1 - x;  // bit position, MSB-first
    const std::size_t digit = digits - 1 - pos / 4;
    const int nibble_bit = static_cast<int>(pos % 4);
    out[digit] = static_cast<char>("0123456789abcdef"[hex_digit_value(
        out[digit]) | (1 << nibble_bit)]);
  }
  return out;
}

BooleanFunction BooleanFunction::from_hex(const std::string& hex, int n) {
  if (hex.empty()) throw std::invalid_argument("from_hex: empty string");
  if (n == 0) {
    // Infer: digits must hold exactly 2^n bits for some n >= 2.
    std::size_t bits = hex.size() * 4;
    if ((bits & (bits - 1)) != 0) {
      throw std::invalid_argument("from_hex: digit count is not 2^k");
    }
    while ((std::size_t{1} << n) < bits) ++n;
  }
  const std::size_t bits = std::size_t{1} << n;
  if (std::max<std::size_t>(1, bits / 4) != hex.size()) {
    throw std::invalid_argument("from_hex: digit count does not match n");
  }
  std::vector<std::uint8_t> table(bits, 0);
  for (std::size_t x = 0; x < bits; ++x) {
    const std::size_t pos = hex.size() * 4 - 1 - x;
    const int v = hex_digit_value(hex[hex.size() - 1 - pos / 4]);
    table[x] = static_cast<std::uint8_t>((v >> (pos % 4)) & 1);
  }
  return BooleanFunction(n, std::move(table));
}

std::string to_string(FunctionClass c) {
  switch (c) {
    case FunctionClass::Constant: return "constant";
    case FunctionClass::Balanced: return "balanced";
    case FunctionClass::Neither: return "neither";
  }
  return "?";
}

FunctionClass classify(const BooleanFunction& f) {
  const std::size_t ones = f.ones_count();
  const std::size_t dim = f.table().size();
  if (ones == 0 || ones == dim) return FunctionClass::Constant;
  if (ones * 2 == dim) return FunctionClass::Balanced;
  return FunctionClass::Neither;
}

DiagonalSignOperator phase_oracle(const BooleanFunction& f) {
  std::vector<int> signs(f.table().size());
  for (std::size_t x = 0; x < signs.size(); ++x) {
    signs[x] = f.table()[x] ? -1 : 1;
  }
  return DiagonalSignOperator(f.num_bits(), std::move(signs));
}

BooleanFunction collins_family(int n) {
  if (n < 2) throw std::invalid_argument("collins_family: n must be >= 2");
  const std::size_t dim = std::size_t{1} << n;
  std::vector<std::uint8_t> table(dim);
  for (std::size_t x = 0; x < dim; ++x) {
    const int last = qubit_bit(x, n, n);
    if (last == 0) {
      table[x] = static_cast<std::uint8_t>(qubit_bit(x, n - 1, n));
    } else {
      int p = 0;
      for (int q = 1; q <= n - 1; ++q) p ^= qubit_bit(x, q, n);
      table[x] = static_cast<std::uint8_t>(p);
    }
  }
  return BooleanFunction(n, std::move(table));
}

DiagonalSignOperator collins_template_on(const std::vector<int>& ordered_qubits,
                                         int n) {
  const int k = static_cast<int>(ordered_qubits.size());
  if (k < 2) {
    throw std::invalid_argument("collins_template_on: need >= 2 spins");
  }
  std::set<int> distinct;
  for (int q : ordered_qubits) {
    if (q < 1 || q > n || !distinct.insert(q).second) {
      throw std::invalid_argument("collins_template_on: bad spin list");
    }
  }
  // Eigenvalue (a + a*b + p*a - p*a*b) / 2 with a, b the (k-1)th and kth
  // listed spins and p the parity of the leading k-2.
  const std::size_t dim = std::size_t{1} << n;
  std::vector<int> signs(dim);
  for (std::size_t x = 0; x < dim; ++x) {
    int p = 1;
    for (int j = 0; j < k - 2; ++j) {
      p *= qubit_bit(x, ordered_qubits[j], n) ? -1 : 1;
    }
    const int a = qubit_bit(x, ordered_qubits[k - 2], n) ? -1 : 1;
    const int b = qubit_bit(x, ordered_qubits[k - 1], n) ? -1 : 1;
    signs[x] = (a + a * b + p * a - p * a * b) / 2;
  }
  return DiagonalSignOperator(n, std::move(signs));
}

Eq3Factorization eq3_factorization(int n) {
  if (n < 2) throw std::invalid_argument("eq3_factorization: n must be >= 2");
  std::vector<int> all(n), head(n - 1);
  for (int q = 1; q <= n; ++q) all[q - 1] = q;
  for (int q = 1; q <= n - 1; ++q) head[q - 1] = q;

  // Product-operator basis elements carry a global 1/2, so the printed
  // pi/2 exponents act as pi/4 parity-phase angles and the scalar
  // prefactor as pi/2. The literal full-angle reading collapses to the
  // identity (the four supports XOR to the empty set).
  Eq3Factorization r;
  r.global_phase = kPi / 2.0;
  r.factors = {
      {head, -kPi / 4.0},
      {all, kPi / 4.0},
      {{n - 1, n}, -kPi / 4.0},
      {{n - 1}, -kPi / 4.0},
  };
  return r;
}

Table1Id Table1Id::parse(const std::string& name) {
  if (name.size() == 2 && name[0] == 'f' && name[1] >= '1' && name[1] <= '9') {
    return Table1Id{name[1] - '0'};
  }
  throw std::invalid_argument("unknown table1 id '" + name +
                              "' (expected f1..f9)");
}

std::string Table1Id::name() const { return "f" + std::to_string(index); }

const std::vector<std::string>& table1_spin_labels() {
  static const std::vector<std::string> labels = {"C1", "C2", "C3", "C4",
                                                  "H1", "H2", "H3"};
  return labels;
}

DiagonalSignOperator table1_operator(const Table1Id& id) {
  const int n = TABLE1_QUBITS;
  DiagonalSignOperator op = [&] {
    switch (id.index) {
      case 1: {
        std::vector<int> signs(std::size_t{1} << n, 1);
        return DiagonalSignOperator(n, std::move(signs));
      }
      case 2: return z_product({2, 3}, n);
      case 3: return z_product({1, 2, 3, 4, 5, 6, 7}, n);
      // Rows f4..f9 are the balanced-family template on each row's spin
      // ordering; canonical qubits are (C1,C2,C3,C4,H1,H2,H3) = (1..7).
      case 4: return collins_template_on({3, 2, 4}, n);           // (C3,C2,C4)
      case 5: return collins_template_on({2, 1, 7}, n);           // (C2,C1,H3)
      case 6: return collins_template_on({1, 2, 3, 4}, n);        // (C1..C4)
      case 7: return collins_template_on({1, 2, 3, 4, 5}, n);     // (..H1)
      case 8: return collins_template_on({1, 2, 3, 4, 5, 6}, n);  // (..H2)
      case 9:
        return collins_template_on({4, 3, 6, 5, 7, 1, 2},
                                   n);  // (C4,C3,H2,H1,H3,C1,C2)
      default:
        throw std::invalid_argument("table1 index outside 1..9");
    }
  }();

  const long long tr = op.trace();
  const long long full = 1ll << n;
  if (id.index == 1 ? tr != full : tr != 0) {
    throw std::runtime_error("table1 " + id.name() +
                             " failed its class trace test");
  }
  return op;
}

BooleanFunction function_of(const DiagonalSignOperator& d) {
  std::vector<std::uint8_t> table(d.dim());
  for (std::size_t x = 0; x < table.size(); ++x) {
    table[x] = d.signs()[x] < 0 ? 1 : 0;
  }
  return BooleanFunction(d.num_qubits(), std::move(table));
}

}  // namespace nmrdj
