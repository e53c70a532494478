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

#include <string>
#include <vector>

#include "nmrdj/topology.hpp"

namespace nmrdj {

struct Spin {
  std::string label;
  std::string species;
  double shift_hz = 0.0;   // resonance offset relative to the carrier
  double gamma = 1.0;      // relative polarization
  int multiplicity = 1;    // equivalent nuclei acting as one logical spin

  bool operator==(const Spin& other) const = default;
};

/// Molecule description: ordered spin list (chain order = qubit order) and
/// the symmetric J coupling matrix in Hz. Invariants enforced on
/// construction: unique labels, multiplicity >= 1, J symmetric with zero
/// diagonal, and nonzero J for every adjacent chain pair.
class SpinSystem {
 public:
  SpinSystem(std::vector<Spin> spins, std::vector<std::vector<double>> j_hz,
             std::string provenance = "");

  int size() const { return static_cast<int>(spins_.size()); }
  const std::vector<Spin>& spins() const { return spins_; }
  const Spin& spin(int k) const { return spins_.at(k - 1); }  // 1-based
  double j(int k, int l) const { return j_hz_.at(k - 1).at(l - 1); }
  const std::string& provenance() const { return provenance_; }

  /// 1-based index of a label; throws if absent.
  int index_of(const std::string& label) const;

  bool operator==(const SpinSystem& other) const = default;

 private:
  std::vector<Spin> spins_;
  std::vector<std::vector<double>> j_hz_;
  std::string provenance_;
};

/// Parse and validate a JSON config document:
///   {"spins": [{"label","species","shift_hz","gamma","multiplicity"},...],
///    "j_hz": [[...],...], "provenance": "..."}
SpinSystem parse_system(const std::string& json_text);

/// Load from a file path; errors mention the path.
SpinSystem load_system(const std::string& path);

/// Serialize back to the config document; load_system(serialize(s)) == s.
std::string serialize_system(const SpinSystem& system);
void save_system(const SpinSystem& system, const std::string& path);

/// Path-graph coupling topology in chain order.
CouplingTopology topology_of(const SpinSystem& system);

}  // namespace nmrdj
