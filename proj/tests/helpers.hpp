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
#include <random>
#include <vector>

#include "nmrdj/oracle.hpp"
#include "nmrdj/parity.hpp"
#include "nmrdj/spin_system.hpp"

namespace nmrdj::test {

// Deterministic uniform integer in [0, bound) regardless of platform.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  return rng() % bound;
}

inline DiagonalSignOperator random_sign_diagonal(std::mt19937_64& rng, int n) {
  std::vector<int> signs(std::size_t{1} << n);
  for (int& s : signs) s = (rng() & 1) ? 1 : -1;
  return DiagonalSignOperator(n, std::move(signs));
}

inline BooleanFunction random_balanced_function(std::mt19937_64& rng, int n) {
  const std::size_t dim = std::size_t{1} << n;
  std::vector<std::uint8_t> table(dim, 0);
  for (std::size_t x = 0; x < dim / 2; ++x) table[x] = 1;
  for (std::size_t i = dim - 1; i > 0; --i) {  // Fisher-Yates
    std::swap(table[i], table[uniform_below(rng, i + 1)]);
  }
  return BooleanFunction(n, std::move(table));
}

inline std::vector<int> random_support(std::mt19937_64& rng, int n) {
  std::vector<int> support;
  while (support.empty()) {
    support.clear();
    for (int q = 1; q <= n; ++q) {
      if (rng() & 1) support.push_back(q);
    }
  }
  return support;
}

// Minimal valid chain: shifts 100*k Hz, adjacent J = 7 Hz, gamma 1.
inline SpinSystem toy_system(int n) {
  std::vector<Spin> spins;
  for (int k = 1; k <= n; ++k) {
    spins.push_back({"S" + std::to_string(k), "spin", 100.0 * k, 1.0, 1});
  }
  std::vector<std::vector<double>> j(n, std::vector<double>(n, 0.0));
  for (int k = 0; k + 1 < n; ++k) j[k][k + 1] = j[k + 1][k] = 7.0;
  return SpinSystem(std::move(spins), std::move(j));
}

// Independent Walsh oracle: direct character sums, no butterfly.
inline std::vector<ParityTerm> brute_force_walsh(const DiagonalSignOperator& d) {
  const int n = d.num_qubits();
  const std::size_t dim = d.dim();
  std::vector<ParityTerm> terms;
  for (std::size_t mask = 0; mask < dim; ++mask) {
    std::vector<int> support;
    for (int q = 1; q <= n; ++q) {
      if ((mask >> (q - 1)) & 1u) support.push_back(q);
    }
    long long acc = 0;
    for (std::size_t x = 0; x < dim; ++x) {
      acc += d.signs()[x] * parity_sign(x, support, n);
    }
    if (acc != 0) {
      terms.push_back({support, static_cast<double>(acc) / dim});
    }
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

}  // namespace nmrdj::test
