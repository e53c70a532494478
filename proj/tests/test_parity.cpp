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

#include <random>

#include "helpers.hpp"
#include "nmrdj/oracle.hpp"
#include "nmrdj/parity.hpp"

using namespace nmrdj;

TEST_CASE("walsh_transform of a single Pauli term") {
  // signs of sigma_z x E at n = 2
  const DiagonalSignOperator d(2, {1, 1, -1, -1});
  const auto terms = walsh_transform(d);
  REQUIRE(terms.size() == 1);
  CHECK(terms[0].support == std::vector<int>{1});
  CHECK(terms[0].coefficient == 1.0);
}

TEST_CASE("walsh_transform of the balanced template at n = 3") {
  // The four-term pattern (E Z E + E Z Z + Z Z E - Z Z Z) / 2.
  const DiagonalSignOperator d = collins_template_on({1, 2, 3}, 3);
  const auto terms = walsh_transform(d);
  REQUIRE(terms.size() == 4);
  CHECK(terms[0].support == std::vector<int>{2});
  CHECK(terms[0].coefficient == 0.5);
  CHECK(terms[1].support == std::vector<int>{1, 2});
  CHECK(terms[1].coefficient == 0.5);
  CHECK(terms[2].support == std::vector<int>{2, 3});
  CHECK(terms[2].coefficient == 0.5);
  CHECK(terms[3].support == std::vector<int>{1, 2, 3});
  CHECK(terms[3].coefficient == -0.5);
}

TEST_CASE("walsh_transform agrees with the direct character sums") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 1 + static_cast<int>(test::uniform_below(rng, 5));
    const DiagonalSignOperator d = test::random_sign_diagonal(rng, n);
    CHECK(walsh_transform(d) == test::brute_force_walsh(d));
  }
}

TEST_CASE("walsh_reconstruct identity term") {
  const DiagonalSignOperator d = walsh_reconstruct({{{}, 1.0}}, 3);
  for (int s : d.signs()) CHECK(s == 1);
}

TEST_CASE("walsh roundtrip is exact") {
  SUBCASE("exhaustive n <= 3") {
    for (int n = 1; n <= 3; ++n) {
      const std::size_t dim = std::size_t{1} << n;
      for (std::size_t bits = 0; bits < (std::size_t{1} << dim); ++bits) {
        std::vector<int> signs(dim);
        for (std::size_t x = 0; x < dim; ++x) {
          signs[x] = (bits >> x) & 1 ? -1 : 1;
        }
        const DiagonalSignOperator d(n, signs);
        CHECK(walsh_reconstruct(walsh_transform(d), n) == d);
      }
    }
  }
  SUBCASE("randomized n = 7") {
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 50; ++trial) {
      const DiagonalSignOperator d = test::random_sign_diagonal(rng, 7);
      CHECK(walsh_reconstruct(walsh_transform(d), 7) == d);
    }
  }
}

TEST_CASE("walsh_reconstruct rejects non-sign decompositions") {
  // Entries come out as 1, 0, 0, -1.
  CHECK_THROWS_AS(walsh_reconstruct({{{1}, 0.5}, {{2}, 0.5}}, 2),
                  std::runtime_error);
}

TEST_CASE("walsh_reconstruct rejects duplicate supports") {
  CHECK_THROWS_AS(walsh_reconstruct({{{1}, 0.5}, {{1}, 0.5}}, 2),
                  std::invalid_argument);
}

TEST_CASE("Parseval holds for sign diagonals") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 1 + static_cast<int>(test::uniform_below(rng, 7));
    const DiagonalSignOperator d = test::random_sign_diagonal(rng, n);
    double sum = 0.0;
    for (const ParityTerm& t : walsh_transform(d)) {
      sum += t.coefficient * t.coefficient;
    }
    CHECK(std::abs(sum - 1.0) < 1e-12);
  }
}

TEST_CASE("DiagonalSignOperator validates entries") {
  CHECK_THROWS_AS(DiagonalSignOperator(1, {1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(DiagonalSignOperator(2, {1, 1, 1}), std::invalid_argument);
}

TEST_CASE("parity_sign follows the MSB index convention") {
  // n = 2: qubit 1 is the high bit of the basis index.
  CHECK(parity_sign(0b10, {1}, 2) == -1);
  CHECK(parity_sign(0b10, {2}, 2) == 1);
  CHECK(parity_sign(0b11, {1, 2}, 2) == 1);
  CHECK(parity_sign(0b01, {1, 2}, 2) == -1);
  CHECK(parity_sign(0b01, {}, 2) == 1);
}
