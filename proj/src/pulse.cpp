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

#include "nmrdj/pulse.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace nmrdj {

namespace {

constexpr double kPi = std::numbers::pi;

// Rotations are 4pi-periodic in the half-angle convention.
double normalize_rf_angle(double a) {
  while (a > 2.0 * kPi) a -= 4.0 * kPi;
  while (a <= -2.0 * kPi) a += 4.0 * kPi;
  return a;
}

// ZZ gates are 2pi-periodic (integer sigma_z eigenvalues).
double normalize_zz_angle(double a) {
  while (a > kPi) a -= 2.0 * kPi;
  while (a <= -kPi) a += 2.0 * kPi;
  return a;
}

void check_spin(int spin, int n, const char* what) {
  if (spin < 1 || spin > n) {
    throw std::invalid_argument(std::string(what) + ": spin " +
                                std::to_string(spin) + " outside 1.." +
                                std::to_string(n));
  }
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

void PulseSequence::push(NativeGate g) {
  if (const RfGate* rf = std::get_if<RfGate>(&g)) {
    check_spin(rf->spin, n, "RF gate");
    RfGate fixed = *rf;
    fixed.angle = normalize_rf_angle(fixed.angle);
    gates.emplace_back(fixed);
    return;
  }
  const ZzGate& zz = std::get<ZzGate>(g);
  check_spin(zz.k, n, "ZZ gate");
  check_spin(zz.l, n, "ZZ gate");
  if (std::abs(zz.k - zz.l) != 1) {
    throw std::invalid_argument("ZZ gate on non-adjacent pair (" +
                                std::to_string(zz.k) + "," +
                                std::to_string(zz.l) + ")");
  }
  gates.emplace_back(zz);
}

void PulseSequence::append(const PulseSequence& tail) {
  if (tail.n != n) {
    throw std::invalid_argument("appending sequences of different registers");
  }
  gates.insert(gates.end(), tail.gates.begin(), tail.gates.end());
  global_phase += tail.global_phase;
}

int PulseSequence::rf_count() const {
  int c = 0;
  for (const NativeGate& g : gates) c += std::holds_alternative<RfGate>(g);
  return c;
}

int PulseSequence::zz_count() const {
  return static_cast<int>(gates.size()) - rf_count();
}

Mat2 rf_matrix(const RfGate& g, double angle_scale) {
  const double a = g.angle * angle_scale;
  if (g.axis == RfAxis::Z) {
    Mat2 m = Mat2::Zero();
    m(0, 0) = std::polar(1.0, -a / 2.0);
    m(1, 1) = std::polar(1.0, a / 2.0);
    return m;
  }
  const double c = std::cos(a / 2.0);
  const double s = std::sin(a / 2.0);
  const Complex off(0.0, -s);
  Mat2 m;
  m(0, 0) = c;
  m(0, 1) = off * std::polar(1.0, -g.phi);
  m(1, 0) = off * std::polar(1.0, g.phi);
  m(1, 1) = c;
  return m;
}

namespace {

// Index pairs (i, i + step) with the target bit clear/set; qubit `spin`
// is bit (n - spin) of the basis index.
template <typename Body>
void for_each_bit_pair(int spin, int n, Body&& body) {
  const std::size_t dim = std::size_t{1} << n;
  const std::size_t step = std::size_t{1} << (n - spin);
  for (std::size_t block = 0; block < dim; block += 2 * step) {
    for (std::size_t i = block; i < block + step; ++i) {
      body(i, i + step);
    }
  }
}

void apply_rf_vector(const RfGate& g, Complex* v, int n, double scale) {
  const Mat2 m = rf_matrix(g, scale);
  if (g.axis == RfAxis::Z) {
    const Complex d0 = m(0, 0), d1 = m(1, 1);
    for_each_bit_pair(g.spin, n, [&](std::size_t i0, std::size_t i1) {
      v[i0] *= d0;
      v[i1] *= d1;
    });
    return;
  }
  const Complex a = m(0, 0), b = m(0, 1), c = m(1, 0), d = m(1, 1);
  for_each_bit_pair(g.spin, n, [&](std::size_t i0, std::size_t i1) {
    const Complex t0 = v[i0], t1 = v[i1];
    v[i0] = a * t0 + b * t1;
    v[i1] = c * t0 + d * t1;
  });
}

void apply_zz_vector(const ZzGate& g, Complex* v, int n) {
  const std::size_t dim = std::size_t{1} << n;
  const std::uint64_t mk = std::uint64_t{1} << (n - g.k);
  const std::uint64_t ml = std::uint64_t{1} << (n - g.l);
  const Complex same = std::polar(1.0, -g.angle);
  const Complex diff = std::polar(1.0, g.angle);
  for (std::size_t x = 0; x < dim; ++x) {
    const bool bk = x & mk, bl = x & ml;
    v[x] *= (bk == bl) ? same : diff;
  }
}

}  // namespace

void apply_gate_in_place(const NativeGate& g, CVector& state, int n,
                         double angle_scale) {
  if (state.size() != (Eigen::Index{1} << n)) {
    throw std::invalid_argument("state dimension does not match register");
  }
  if (const RfGate* rf = std::get_if<RfGate>(&g)) {
    apply_rf_vector(*rf, state.data(), n, angle_scale);
  } else {
    apply_zz_vector(std::get<ZzGate>(g), state.data(), n);
  }
}

void apply_gate_left_in_place(const NativeGate& g, CMatrix& m, int n,
                              double angle_scale) {
  if (m.rows() != (Eigen::Index{1} << n)) {
    throw std::invalid_argument("matrix dimension does not match register");
  }
  for (Eigen::Index col = 0; col < m.cols(); ++col) {
    Complex* v = m.data() + col * m.rows();
    if (const RfGate* rf = std::get_if<RfGate>(&g)) {
      apply_rf_vector(*rf, v, n, angle_scale);
    } else {
      apply_zz_vector(std::get<ZzGate>(g), v, n);
    }
  }
}

CMatrix sequence_unitary(const PulseSequence& ps, double angle_scale) {
  const Eigen::Index dim = Eigen::Index{1} << ps.n;
  CMatrix u = CMatrix::Identity(dim, dim);
  for (const NativeGate& g : ps.gates) {
    apply_gate_left_in_place(g, u, ps.n, angle_scale);
  }
  u *= std::polar(1.0, ps.global_phase);
  return u;
}

PulseSequence compile_cnot(int control, int target,
                           const CouplingTopology& topo) {
  if (!topo.adjacent(control, target)) {
    throw std::invalid_argument("CNOT needs an adjacent pair, got (" +
                                std::to_string(control) + "," +
                                std::to_string(target) + ")");
  }
  PulseSequence ps(topo.n);
  ps.global_phase = -kPi / 4.0;
  ps.push(RfGate{target, RfAxis::Transverse, kPi / 2.0, -kPi / 2.0});
  ps.push(ZzGate{control, target, kPi / 4.0, 0.0});
  ps.push(RfGate{target, RfAxis::Z, 0.0, -kPi / 2.0});
  ps.push(RfGate{control, RfAxis::Z, 0.0, -kPi / 2.0});
  ps.push(RfGate{target, RfAxis::Transverse, kPi / 2.0, kPi / 2.0});
  return ps;
}

PulseSequence compile_swap(int k, int l, const CouplingTopology& topo) {
  PulseSequence ps = compile_cnot(k, l, topo);
  ps.append(compile_cnot(l, k, topo));
  ps.append(compile_cnot(k, l, topo));
  return ps;
}

PulseSequence compile_parity_phase(const ParityPhaseGate& g,
                                   const CouplingTopology& topo) {
  std::vector<int> support = g.support;
  std::sort(support.begin(), support.end());
  if (support.empty()) {
    throw std::invalid_argument("compile_parity_phase: empty support");
  }
  if (std::adjacent_find(support.begin(), support.end()) != support.end()) {
    throw std::invalid_argument("compile_parity_phase: duplicate spin");
  }
  check_spin(support.front(), topo.n, "parity-phase support");
  check_spin(support.back(), topo.n, "parity-phase support");

  PulseSequence ps(topo.n);
  const int k = static_cast<int>(support.size());
  if (k == 1) {
    ps.push(RfGate{support[0], RfAxis::Z, 0.0, -2.0 * g.angle});
    return ps;
  }

  // Gather the support into the contiguous block starting at its lowest
  // position, moving each member leftward one neighbor at a time.
  std::vector<std::pair<int, int>> swaps;
  const int base = support.front();
  for (int j = 1; j < k; ++j) {
    for (int cur = support[j]; cur > base + j; --cur) {
      swaps.emplace_back(cur - 1, cur);
    }
  }
  for (const auto& [a, b] : swaps) ps.append(compile_swap(a, b, topo));

  const int terminal = base + k - 1;
  for (int pos = base; pos < terminal; ++pos) {
    ps.append(compile_cnot(pos, pos + 1, topo));
  }
  ps.push(RfGate{terminal, RfAxis::Z, 0.0, -2.0 * g.angle});
  for (int pos = terminal - 1; pos >= base; --pos) {
    ps.append(compile_cnot(pos, pos + 1, topo));
  }
  for (auto it = swaps.rbegin(); it != swaps.rend(); ++it) {
    ps.append(compile_swap(it->first, it->second, topo));
  }
  return ps;
}

PulseSequence compile_diagonal(const DiagonalSignOperator& d,
                               const CouplingTopology& topo) {
  if (d.num_qubits() != topo.n) {
    throw std::invalid_argument("diagonal and topology sizes differ");
  }
  PulseSequence ps(topo.n);
  ps.global_phase = kPi / 2.0;
  for (const ParityTerm& term : walsh_transform(d)) {
    const double theta = -(kPi / 2.0) * term.coefficient;
    if (term.support.empty()) {
      ps.global_phase += theta;
    } else {
      ps.append(compile_parity_phase({term.support, theta}, topo));
    }
  }
  return ps;
}

PulseSequence simplify(const PulseSequence& ps) {
  PulseSequence out(ps.n);
  out.global_phase = ps.global_phase;
  auto& stack = out.gates;

  auto push_rf = [&](const RfGate& g) {
    if (!stack.empty()) {
      if (RfGate* top = std::get_if<RfGate>(&stack.back())) {
        const bool same_axis =
            top->axis == g.axis &&
            (g.axis == RfAxis::Z || top->phi == g.phi);
        if (top->spin == g.spin && same_axis) {
          top->angle = normalize_rf_angle(top->angle + g.angle);
          if (top->angle == 0.0) stack.pop_back();
          return;
        }
      }
    }
    if (normalize_rf_angle(g.angle) != 0.0) stack.push_back(g);
  };
  auto push_zz = [&](const ZzGate& g) {
    if (!stack.empty()) {
      if (ZzGate* top = std::get_if<ZzGate>(&stack.back())) {
        if ((top->k == g.k && top->l == g.l) ||
            (top->k == g.l && top->l == g.k)) {
          top->angle = normalize_zz_angle(top->angle + g.angle);
          top->duration_s = 0.0;  // stale once merged
          if (top->angle == 0.0) stack.pop_back();
          return;
        }
      }
    }
    if (normalize_zz_angle(g.angle) != 0.0) stack.push_back(g);
  };

  for (const NativeGate& g : ps.gates) {
    if (const RfGate* rf = std::get_if<RfGate>(&g)) {
      push_rf(*rf);
    } else {
      push_zz(std::get<ZzGate>(g));
    }
  }
  return out;
}

namespace {

// Free evolution runs forward only: angles whose direct time would be
// negative are realized as theta + pi (same unitary up to global phase).
double zz_duration(double theta, double j_hz, bool& inverted) {
  const double direct = 2.0 * theta / (kPi * j_hz);
  if (direct >= 0.0) return direct;
  const double step = std::abs(2.0 / j_hz);
  inverted = true;
  return direct + std::ceil(-direct / step) * step;
}

}  // namespace

SequenceStats sequence_stats(const PulseSequence& ps,
                             const SpinSystem& system) {
  if (system.size() != ps.n) {
    throw std::invalid_argument("sequence register does not match system");
  }
  SequenceStats stats;
  for (const NativeGate& g : ps.gates) {
    if (std::holds_alternative<RfGate>(g)) {
      ++stats.rf_count;
      continue;
    }
    const ZzGate& zz = std::get<ZzGate>(g);
    ++stats.zz_count;
    const double j = system.j(zz.k, zz.l);
    if (j == 0.0) {
      throw std::runtime_error("ZZ gate on pair (" + std::to_string(zz.k) +
                               "," + std::to_string(zz.l) +
                               ") with zero J coupling");
    }
    bool inverted = false;
    stats.total_j_seconds += zz_duration(zz.angle, j, inverted);
    stats.phase_inverted_zz += inverted;
  }
  return stats;
}

PulseSequence annotate_durations(const PulseSequence& ps,
                                 const SpinSystem& system) {
  if (system.size() != ps.n) {
    throw std::invalid_argument("sequence register does not match system");
  }
  PulseSequence out = ps;
  for (NativeGate& g : out.gates) {
    if (ZzGate* zz = std::get_if<ZzGate>(&g)) {
      const double j = system.j(zz->k, zz->l);
      if (j == 0.0) {
        throw std::runtime_error("ZZ gate on pair with zero J coupling");
      }
      bool inverted = false;
      zz->duration_s = zz_duration(zz->angle, j, inverted);
    }
  }
  return out;
}

std::string write_sequence(const PulseSequence& ps) {
  std::string out = "# n=" + std::to_string(ps.n) +
                    " global_phase=" + format_double(ps.global_phase) + "\n";
  for (const NativeGate& g : ps.gates) {
    if (const RfGate* rf = std::get_if<RfGate>(&g)) {
      out += "RF " + std::to_string(rf->spin) + " " +
             (rf->axis == RfAxis::Z ? std::string("z")
                                    : format_double(rf->phi)) +
             " " + format_double(rf->angle) + "\n";
    } else {
      const ZzGate& zz = std::get<ZzGate>(g);
      out += "ZZ " + std::to_string(zz.k) + " " + std::to_string(zz.l) + " " +
             format_double(zz.angle) + " " + format_double(zz.duration_s) +
             "\n";
    }
  }
  return out;
}

PulseSequence parse_sequence(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) {
    throw std::invalid_argument("empty sequence document");
  }
  int n = 0;
  double phase = 0.0;
  if (std::sscanf(line.c_str(), "# n=%d global_phase=%lf", &n, &phase) != 2) {
    throw std::invalid_argument("bad sequence header: " + line);
  }
  PulseSequence ps(n);
  ps.global_phase = phase;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string kind;
    ls >> kind;
    if (kind == "RF") {
      int spin = 0;
      std::string axis;
      double angle = 0.0;
      ls >> spin >> axis >> angle;
      if (!ls) throw std::invalid_argument("bad RF line: " + line);
      if (axis == "z") {
        ps.push(RfGate{spin, RfAxis::Z, 0.0, angle});
      } else {
        ps.push(RfGate{spin, RfAxis::Transverse, std::stod(axis), angle});
      }
    } else if (kind == "ZZ") {
      ZzGate zz;
      ls >> zz.k >> zz.l >> zz.angle >> zz.duration_s;
      if (!ls) throw std::invalid_argument("bad ZZ line: " + line);
      ps.push(zz);
    } else {
      throw std::invalid_argument("unknown gate kind in line: " + line);
    }
  }
  return ps;
}

}  // namespace nmrdj
