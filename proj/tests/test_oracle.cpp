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

#include <doctest.h>

#include <cstdlib>
#include <random>

#include "helpers.hpp"
#include "nmrdj/oracle.hpp"

using namespace nmrdj;

namespace {

// The four-term product-operator sum built densely, the reference for the
// balanced-family eigenvalues.
CMatrix balanced_family_dense(int n) {
  std::vector<Mat2> a(n, identity2());
  std::vector<Mat2> b(n, identity2());
  std::vector<Mat2> c(n, identity2());
  std::vector<Mat2> d(n, identity2());
  a[n - 2] = pauli_z();
  b[n - 2] = pauli_z();
  b[n - 1] = pauli_z();
  for (int i = 0; i < n - 1; ++i) c[i] = pauli_z();
  for (int i = 0; i < n; ++i) d[i] = pauli_z();
  return 0.5 * (kron_all(a) + kron_all(b) + kron_all(c) - kron_all(d));
}

}  // namespace

TEST_CASE("classify by ones count") {
  CHECK(classify(BooleanFunction(2, {0, 0, 0, 0})) == FunctionClass::Constant);
  CHECK(classify(BooleanFunction(2, {1, 1, 1, 1})) == FunctionClass::Constant);
  CHECK(classify(BooleanFunction(2, {0, 1, 1, 0})) == FunctionClass::Balanced);
  CHECK(classify(BooleanFunction(2, {1, 1, 1, 0})) == FunctionClass::Neither);
}

TEST_CASE("phase_oracle signs") {
  SUBCASE("constant zero is the identity diagonal") {
    const auto d = phase_oracle(BooleanFunction(3, std::vector<std::uint8_t>(8, 0)));
    for (int s : d.signs()) CHECK(s == 1);
  }
  SUBCASE("f = most significant bit") {
    const auto d = phase_oracle(BooleanFunction(2, {0, 0, 1, 1}));
    CHECK(d.signs() == std::vector<int>{1, 1, -1, -1});
  }
  SUBCASE("f = x_C2 xor x_C3 on seven qubits equals the f2 row") {
    std::vector<std::uint8_t> table(128);
    for (std::uint64_t x = 0; x < 128; ++x) {
      table[x] =
          static_cast<std::uint8_t>(qubit_bit(x, 2, 7) ^ qubit_bit(x, 3, 7));
    }
    CHECK(phase_oracle(BooleanFunction(7, table)) ==
          table1_operator(Table1Id{2}));
  }
}

TEST_CASE("classify matches the oracle trace") {
  SUBCASE("exhaustive n <= 3") {
    for (int n = 1; n <= 3; ++n) {
      const std::size_t dim = std::size_t{1} << n;
      for (std::size_t bits = 0; bits < (std::size_t{1} << dim); ++bits) {
        std::vector<std::uint8_t> table(dim);
        for (std::size_t x = 0; x < dim; ++x) table[x] = (bits >> x) & 1;
        const BooleanFunction f(n, table);
        const long long tr = phase_oracle(f).trace();
        switch (classify(f)) {
          case FunctionClass::Constant:
            CHECK(std::abs(tr) == (1ll << n));
            break;
          case FunctionClass::Balanced: CHECK(tr == 0); break;
          case FunctionClass::Neither:
            CHECK(std::abs(tr) != (1ll << n));
            CHECK(tr != 0);
            break;
        }
      }
    }
  }
  SUBCASE("random balanced at n = 7") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 20; ++trial) {
      const BooleanFunction f = test::random_balanced_function(rng, 7);
      CHECK(classify(f) == FunctionClass::Balanced);
      CHECK(phase_oracle(f).trace() == 0);
    }
  }
}

TEST_CASE("collins_family truth tables") {
  CHECK(collins_family(2).table() ==
        std::vector<std::uint8_t>{0, 0, 1, 1});
  CHECK(collins_family(3).table() ==
        std::vector<std::uint8_t>{0, 0, 1, 1, 0, 1, 1, 0});
  CHECK_THROWS_AS(collins_family(1), std::invalid_argument);
}

TEST_CASE("collins_family is balanced for n = 2..10") {
  for (int n = 2; n <= 10; ++n) {
    CHECK(classify(collins_family(n)) == FunctionClass::Balanced);
  }
}

TEST_CASE("collins_family eigenvalues match the dense four-term sum") {
  for (int n = 2; n <= 7; ++n) {
    const CMatrix expected = balanced_family_dense(n);
    const CMatrix actual = phase_oracle(collins_family(n)).to_matrix();
    CHECK(sup_distance(actual, expected) == 0.0);
  }
}

TEST_CASE("eq3_factorization structure") {
  const double pi = std::numbers::pi;
  SUBCASE("n = 3") {
    const Eq3Factorization f = eq3_factorization(3);
    CHECK(f.global_phase == pi / 2.0);
    REQUIRE(f.factors.size() == 4);
    CHECK(f.factors[0].support == std::vector<int>{1, 2});
    CHECK(f.factors[0].angle == -pi / 4.0);
    CHECK(f.factors[1].support == std::vector<int>{1, 2, 3});
    CHECK(f.factors[1].angle == pi / 4.0);
    CHECK(f.factors[2].support == std::vector<int>{2, 3});
    CHECK(f.factors[2].angle == -pi / 4.0);
    CHECK(f.factors[3].support == std::vector<int>{2});
    CHECK(f.factors[3].angle == -pi / 4.0);
  }
  SUBCASE("n = 7 carries the seventh-order factor") {
    const Eq3Factorization f = eq3_factorization(7);
    CHECK(f.factors[1].support == std::vector<int>{1, 2, 3, 4, 5, 6, 7});
    CHECK(f.factors[1].angle == pi / 4.0);
  }
  CHECK_THROWS_AS(eq3_factorization(1), std::invalid_argument);
}

TEST_CASE("eq3 product reproduces the balanced-family oracle") {
  for (int n = 2; n <= 7; ++n) {
    const Eq3Factorization f = eq3_factorization(n);
    const Eigen::Index dim = Eigen::Index{1} << n;
    CMatrix product = CMatrix::Identity(dim, dim);
    for (const ParityPhaseGate& g : f.factors) {
      product = parity_phase_unitary(g, n).matrix() * product;
    }
    product *= std::polar(1.0, f.global_phase);

    const CMatrix oracle = phase_oracle(collins_family(n)).to_matrix();
    CHECK(sup_distance(product, oracle) < 1e-12);  // phase included
    CHECK(global_phase_fidelity(product, oracle) ==
          doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("table1 rows") {
  SUBCASE("f1 is the identity on 2^7") {
    const auto d = table1_operator(Table1Id{1});
    for (int s : d.signs()) CHECK(s == 1);
  }
  SUBCASE("f3 is the full parity diagonal") {
    const auto d = table1_operator(Table1Id{3});
    for (std::uint64_t x = 0; x < d.dim(); ++x) {
      CHECK(d.signs()[x] == parity_sign(x, {1, 2, 3, 4, 5, 6, 7}, 7));
    }
  }
  SUBCASE("f9 is the template on (C4,C3,H2,H1,H3,C1,C2)") {
    CHECK(table1_operator(Table1Id{9}) ==
          collins_template_on({4, 3, 6, 5, 7, 1, 2}, 7));
  }
  SUBCASE("trace classes") {
    CHECK(table1_operator(Table1Id{1}).trace() == 128);
    for (int i = 2; i <= 9; ++i) {
      CHECK(table1_operator(Table1Id{i}).trace() == 0);
    }
  }
}

TEST_CASE("table1 product-operator spectra stay small") {
  for (int i = 1; i <= 9; ++i) {
    const auto terms = walsh_transform(table1_operator(Table1Id{i}));
    if (i <= 3) {
      REQUIRE(terms.size() == 1);
      CHECK(std::abs(terms[0].coefficient) == 1.0);
    } else {
      REQUIRE(terms.size() == 4);
      int halves = 0, neg = 0;
      for (const ParityTerm& t : terms) {
        halves += std::abs(t.coefficient) == 0.5;
        neg += t.coefficient < 0.0;
      }
      CHECK(halves == 4);
      CHECK(neg == 1);
    }
  }
}

TEST_CASE("Table1Id parsing") {
  CHECK(Table1Id::parse("f1").index == 1);
  CHECK(Table1Id::parse("f9").index == 9);
  CHECK_THROWS_AS(Table1Id::parse("f0"), std::invalid_argument);
  CHECK_THROWS_AS(Table1Id::parse("g1"), std::invalid_argument);
  CHECK_THROWS_AS(Table1Id::parse("f10"), std::invalid_argument);
}

TEST_CASE("hex truth-table codec") {
  CHECK(BooleanFunction(2, {0, 1, 1, 0}).to_hex() == "6");
  CHECK(BooleanFunction::from_hex("6") == BooleanFunction(2, {0, 1, 1, 0}));
  CHECK(BooleanFunction::from_hex("8", 1) == BooleanFunction(1, {1, 0}));

  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + static_cast<int>(test::uniform_below(rng, 6));
    const BooleanFunction f = test::random_balanced_function(rng, n);
    CHECK(BooleanFunction::from_hex(f.to_hex()) == f);
  }
  CHECK_THROWS_AS(BooleanFunction::from_hex("xyz"), std::invalid_argument);
  CHECK_THROWS_AS(BooleanFunction::from_hex("123"), std::invalid_argument);
}

TEST_CASE("function_of inverts phase_oracle") {
  std::mt19937_64 rng(37);
  const BooleanFunction f = test::random_balanced_function(rng, 5);
  CHECK(function_of(phase_oracle(f)) == f);
}
