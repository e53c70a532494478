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

#include "nmrdj/spin_system.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace nmrdj {

using nlohmann::json;

SpinSystem::SpinSystem(std::vector<Spin> spins,
                       std::vector<std::vector<double>> j_hz,
                       std::string provenance)
    : spins_(std::move(spins)),
      j_hz_(std::move(j_hz)),
      provenance_(std::move(provenance)) {
  const std::size_t n = spins_.size();
  if (n < 1) throw std::invalid_argument("spin system is empty");

  std::set<std::string> labels;
  for (const Spin& s : spins_) {
    if (s.label.empty()) throw std::invalid_argument("spin with empty label");
    if (!labels.insert(s.label).second) {
      throw std::invalid_argument("duplicate spin label '" + s.label + "'");
    }
    if (s.multiplicity < 1) {
      throw std::invalid_argument("spin '" + s.label +
                                  "' has multiplicity < 1");
    }
    if (!std::isfinite(s.shift_hz) || !std::isfinite(s.gamma)) {
      throw std::invalid_argument("spin '" + s.label +
                                  "' has a non-finite field");
    }
  }

  if (j_hz_.size() != n) {
    throw std::invalid_argument("J matrix row count does not match spins");
  }
  for (std::size_t r = 0; r < n; ++r) {
    if (j_hz_[r].size() != n) {
      throw std::invalid_argument("J matrix is not square");
    }
  }
  for (std::size_t r = 0; r < n; ++r) {
    if (j_hz_[r][r] != 0.0) {
      throw std::invalid_argument("J matrix diagonal must be zero");
    }
    for (std::size_t c = r + 1; c < n; ++c) {
      if (j_hz_[r][c] != j_hz_[c][r]) {
        throw std::invalid_argument("J matrix is asymmetric at (" +
                                    std::to_string(r + 1) + "," +
                                    std::to_string(c + 1) + ")");
      }
      if (!std::isfinite(j_hz_[r][c])) {
        throw std::invalid_argument("non-finite J entry");
      }
    }
  }
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (j_hz_[k][k + 1] == 0.0) {
      throw std::invalid_argument("zero J coupling on adjacent chain pair (" +
                                  std::to_string(k + 1) + "," +
                                  std::to_string(k + 2) + ")");
    }
  }
}

int SpinSystem::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < spins_.size(); ++i) {
    if (spins_[i].label == label) return static_cast<int>(i) + 1;
  }
  throw std::invalid_argument("no spin labelled '" + label + "'");
}

SpinSystem parse_system(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("config is not valid JSON: ") +
                                e.what());
  }
  if (!doc.is_object() || !doc.contains("spins") || !doc.contains("j_hz")) {
    throw std::invalid_argument("config must have 'spins' and 'j_hz'");
  }

  std::vector<Spin> spins;
  for (const json& js : doc.at("spins")) {
    Spin s;
    s.label = js.at("label").get<std::string>();
    s.species = js.value("species", std::string{});
    s.shift_hz = js.at("shift_hz").get<double>();
    s.gamma = js.at("gamma").get<double>();
    s.multiplicity = js.value("multiplicity", 1);
    spins.push_back(std::move(s));
  }

  std::vector<std::vector<double>> j_hz;
  for (const json& row : doc.at("j_hz")) {
    j_hz.push_back(row.get<std::vector<double>>());
  }

  return SpinSystem(std::move(spins), std::move(j_hz),
                    doc.value("provenance", std::string{}));
}

SpinSystem load_system(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open system file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_system(buf.str());
  } catch (const std::exception& e) {
    throw std::invalid_argument("'" + path + "': " + e.what());
  }
}

std::string serialize_system(const SpinSystem& system) {
  json doc;
  doc["provenance"] = system.provenance();
  doc["spins"] = json::array();
  for (const Spin& s : system.spins()) {
    doc["spins"].push_back({{"label", s.label},
                            {"species", s.species},
                            {"shift_hz", s.shift_hz},
                            {"gamma", s.gamma},
                            {"multiplicity", s.multiplicity}});
  }
  doc["j_hz"] = json::array();
  for (int r = 1; r <= system.size(); ++r) {
    json row = json::array();
    for (int c = 1; c <= system.size(); ++c) row.push_back(system.j(r, c));
    doc["j_hz"].push_back(std::move(row));
  }
  return doc.dump(2) + "\n";
}

void save_system(const SpinSystem& system, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write '" + path + "'");
  out << serialize_system(system);
}

CouplingTopology topology_of(const SpinSystem& system) {
  return CouplingTopology(system.size());
}

}  // namespace nmrdj
