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

#include "nmrdj/simulator.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

namespace nmrdj {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kStateTol = 1e-12;
constexpr double kAmplitudeFloor = 1e-12;  // below this a phase is unreadable

int checked_register(int n) {
  if (n < 1 || n > MAX_QUBITS) {
    throw std::invalid_argument("register size outside 1..12");
  }
  return n;
}

}  // namespace

StateVector::StateVector(int n, CVector amplitudes)
    : n_(checked_register(n)), amps_(std::move(amplitudes)) {
  if (amps_.size() != (Eigen::Index{1} << n_)) {
    throw std::invalid_argument("amplitude count must be 2^n");
  }
  if (std::abs(amps_.norm() - 1.0) > kStateTol) {
    throw std::invalid_argument("state vector is not normalized");
  }
}

StateVector StateVector::ground(int n) {
  CVector v = CVector::Zero(Eigen::Index{1} << checked_register(n));
  v(0) = 1.0;
  return StateVector(n, std::move(v));
}

DeviationDensityMatrix::DeviationDensityMatrix(int n, CMatrix rho)
    : n_(checked_register(n)), rho_(std::move(rho)) {
  const Eigen::Index dim = Eigen::Index{1} << n_;
  if (rho_.rows() != dim || rho_.cols() != dim) {
    throw std::invalid_argument("density matrix must be 2^n x 2^n");
  }
  if (sup_norm(rho_ - rho_.adjoint()) > kStateTol) {
    throw std::invalid_argument("deviation matrix is not Hermitian");
  }
  if (std::abs(rho_.trace()) > kStateTol) {
    throw std::invalid_argument("deviation matrix is not traceless");
  }
}

double ImperfectionModel::angle_scale() const {
  if (std::abs(epsilon) >= 0.5) {
    throw std::invalid_argument("pulse-angle scale |epsilon| must be < 0.5");
  }
  return 1.0 + epsilon;
}

std::string to_string(PhaseClass c) {
  switch (c) {
    case PhaseClass::Absorptive: return "absorptive";
    case PhaseClass::Emissive: return "emissive";
    case PhaseClass::Mixed: return "mixed";
  }
  return "?";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Constant: return "constant";
    case Verdict::Balanced: return "balanced";
    case Verdict::Undefined: return "undefined";
  }
  return "?";
}

PureDjResult pure_dj_run(const BooleanFunction& f) {
  const int n = f.num_bits();
  CVector psi = CVector::Zero(Eigen::Index{1} << n);
  psi(0) = 1.0;

  // h on every qubit: 90 degree pulses along +y.
  for (int q = 1; q <= n; ++q) {
    apply_gate_in_place(RfGate{q, RfAxis::Transverse, kPi / 2.0, kPi / 2.0},
                        psi, n);
  }
  PureDjResult result;
  for (Eigen::Index x = 0; x < psi.size(); ++x) {
    if (f(static_cast<std::uint64_t>(x))) psi(x) = -psi(x);
  }
  result.oracle_calls = 1;
  // h^-1 on every qubit: 90 degree pulses along -y.
  for (int q = 1; q <= n; ++q) {
    apply_gate_in_place(RfGate{q, RfAxis::Transverse, -kPi / 2.0, kPi / 2.0},
                        psi, n);
  }

  Eigen::Index best = 0;
  double best_p = 0.0;
  for (Eigen::Index x = 0; x < psi.size(); ++x) {
    const double p = std::norm(psi(x));
    if (p > best_p) {
      best_p = p;
      best = x;
    }
  }
  result.outcome_probability = best_p;
  result.outcome_bits.resize(n);
  for (int q = 1; q <= n; ++q) {
    result.outcome_bits[q - 1] = qubit_bit(best, q, n) ? '1' : '0';
  }

  const double p_zero = std::norm(psi(0));
  if (classify(f) == FunctionClass::Neither) {
    result.promise_violated = true;
    result.verdict = Verdict::Undefined;
  } else {
    result.verdict =
        p_zero >= 1.0 - 1e-9 ? Verdict::Constant : Verdict::Balanced;
  }
  return result;
}

DeviationDensityMatrix thermal_state(const SpinSystem& system) {
  const int n = system.size();
  const Eigen::Index dim = Eigen::Index{1} << n;
  CMatrix rho = CMatrix::Zero(dim, dim);
  for (Eigen::Index x = 0; x < dim; ++x) {
    double v = 0.0;
    for (int k = 1; k <= n; ++k) {
      v += system.spin(k).gamma * (qubit_bit(x, k, n) ? -1.0 : 1.0);
    }
    rho(x, x) = v;
  }
  return DeviationDensityMatrix(n, std::move(rho));
}

StateVector apply(const PulseSequence& ps, const StateVector& state,
                  const ImperfectionModel& model) {
  if (ps.n != state.num_qubits()) {
    throw std::invalid_argument("sequence and state sizes differ");
  }
  const double scale = model.angle_scale();
  CVector psi = state.amplitudes();
  for (const NativeGate& g : ps.gates) {
    apply_gate_in_place(g, psi, ps.n, scale);
  }
  psi *= std::polar(1.0, ps.global_phase);
  return StateVector(state.num_qubits(), std::move(psi));
}

StateVector apply(const UnitaryMatrix& u, const StateVector& state) {
  if (u.num_qubits() != state.num_qubits()) {
    throw std::invalid_argument("unitary and state sizes differ");
  }
  return StateVector(state.num_qubits(), u.matrix() * state.amplitudes());
}

DeviationDensityMatrix apply(const PulseSequence& ps,
                             const DeviationDensityMatrix& rho,
                             const ImperfectionModel& model) {
  if (ps.n != rho.num_qubits()) {
    throw std::invalid_argument("sequence and state sizes differ");
  }
  const CMatrix u = sequence_unitary(ps, model.angle_scale());
  return DeviationDensityMatrix(rho.num_qubits(),
                                u * rho.matrix() * u.adjoint());
}

DeviationDensityMatrix apply(const UnitaryMatrix& u,
                             const DeviationDensityMatrix& rho) {
  if (u.num_qubits() != rho.num_qubits()) {
    throw std::invalid_argument("unitary and state sizes differ");
  }
  return DeviationDensityMatrix(
      rho.num_qubits(), u.matrix() * rho.matrix() * u.matrix().adjoint());
}

namespace {

PhaseClass classify_phase(const Complex& amplitude, double tol) {
  if (std::abs(amplitude) < kAmplitudeFloor) return PhaseClass::Mixed;
  const double arg = std::arg(amplitude);
  if (std::abs(arg) < tol) return PhaseClass::Absorptive;
  if (kPi - std::abs(arg) < tol) return PhaseClass::Emissive;
  return PhaseClass::Mixed;
}

}  // namespace

std::vector<SpectrumLine> readout_spectrum(const DeviationDensityMatrix& rho,
                                           int spin, const SpinSystem& system,
                                           bool methyl_expand,
                                           ReadoutPulse pulse,
                                           double phase_tol) {
  const int n = system.size();
  if (rho.num_qubits() != n) {
    throw std::invalid_argument("state and system sizes differ");
  }
  if (spin < 1 || spin > n) {
    throw std::invalid_argument("readout spin index outside 1.." +
                                std::to_string(n));
  }

  CMatrix state = rho.matrix();
  if (pulse == ReadoutPulse::SelectiveY90) {
    const Eigen::Index dim = state.rows();
    CMatrix u = CMatrix::Identity(dim, dim);
    apply_gate_left_in_place(
        RfGate{spin, RfAxis::Transverse, kPi / 2.0, kPi / 2.0}, u, n);
    state = u * state * u.adjoint();
  }

  // Spectators in spin order; logical amplitudes indexed by their bits.
  std::vector<int> spectators;
  for (int l = 1; l <= n; ++l) {
    if (l != spin) spectators.push_back(l);
  }
  const int n_spec = static_cast<int>(spectators.size());
  const std::uint64_t spin_mask = std::uint64_t{1} << (n - spin);

  const std::size_t n_logical = std::size_t{1} << n_spec;
  std::vector<Complex> amps(n_logical);
  for (std::size_t m = 0; m < n_logical; ++m) {
    std::uint64_t i0 = 0;
    for (int j = 0; j < n_spec; ++j) {
      if ((m >> j) & 1u) i0 |= std::uint64_t{1} << (n - spectators[j]);
    }
    amps[m] = 2.0 * state(i0, i0 | spin_mask);
  }

  // Per-spectator frequency grids in units of that pair's J coupling.
  // A logical spectator contributes +-1/2; a methyl spectator's doublet is
  // convolved with the two extra equivalent protons' (1/4,1/2,1/4) binomial
  // triplet, giving the merged quartet grid.
  struct Axis {
    std::vector<double> offsets;                 // in units of J
    std::vector<std::vector<double>> weights;    // [logical bit][grid point]
  };
  std::vector<Axis> axes(n_spec);
  for (int j = 0; j < n_spec; ++j) {
    const bool methyl =
        methyl_expand && system.spin(spectators[j]).multiplicity == 3;
    if (methyl) {
      axes[j].offsets = {1.5, 0.5, -0.5, -1.5};
      axes[j].weights = {{0.25, 0.5, 0.25, 0.0}, {0.0, 0.25, 0.5, 0.25}};
    } else {
      axes[j].offsets = {0.5, -0.5};
      axes[j].weights = {{1.0, 0.0}, {0.0, 1.0}};
    }
  }

  std::size_t n_lines = 1;
  for (const Axis& a : axes) n_lines *= a.offsets.size();

  std::vector<SpectrumLine> lines;
  lines.reserve(n_lines);
  std::vector<std::size_t> grid(n_spec, 0);
  for (std::size_t line = 0; line < n_lines; ++line) {
    double freq = system.spin(spin).shift_hz;
    for (int j = 0; j < n_spec; ++j) {
      freq += axes[j].offsets[grid[j]] * system.j(spin, spectators[j]);
    }
    Complex amp = 0.0;
    for (std::size_t m = 0; m < n_logical; ++m) {
      double w = 1.0;
      for (int j = 0; j < n_spec && w != 0.0; ++j) {
        w *= axes[j].weights[(m >> j) & 1u][grid[j]];
      }
      if (w != 0.0) amp += w * amps[m];
    }
    lines.push_back({system.spin(spin).label, freq, amp,
                     classify_phase(amp, phase_tol)});

    for (int j = n_spec - 1; j >= 0; --j) {
      if (++grid[j] < axes[j].offsets.size()) break;
      grid[j] = 0;
    }
  }
  return lines;
}

namespace {

DjNmrResult run_nmr(const DiagonalSignOperator& oracle,
                    const SpinSystem& system, const ImperfectionModel& model,
                    bool methyl_expand) {
  const int n = system.size();
  if (oracle.num_qubits() != n) {
    throw std::invalid_argument("oracle and system sizes differ");
  }

  DeviationDensityMatrix rho = thermal_state(system);

  PulseSequence excitation(n);
  for (int k = 1; k <= n; ++k) {
    excitation.push(RfGate{k, RfAxis::Transverse, kPi / 2.0, kPi / 2.0});
  }
  rho = apply(excitation, rho, model);

  DjNmrResult result;
  const PulseSequence compiled =
      compile_diagonal(oracle, topology_of(system));
  rho = apply(compiled, rho, model);
  result.oracle_calls = 1;

  result.phase_tol =
      model.epsilon == 0.0 ? IDEAL_PHASE_TOL : LOOSE_PHASE_TOL;
  bool any_emissive = false;
  bool any_mixed = false;
  for (int k = 1; k <= n; ++k) {
    result.spectra.push_back(readout_spectrum(rho, k, system, methyl_expand,
                                              ReadoutPulse::None,
                                              result.phase_tol));
    for (const SpectrumLine& line : result.spectra.back()) {
      any_emissive |= line.phase_class == PhaseClass::Emissive;
      any_mixed |= line.phase_class == PhaseClass::Mixed;
    }
  }

  if (any_mixed && model.epsilon == 0.0) {
    throw std::runtime_error(
        "mixed-phase line under ideal pulses: internal error");
  }
  if (any_emissive) {
    result.verdict = Verdict::Balanced;
  } else if (!any_mixed) {
    result.verdict = Verdict::Constant;
  } else {
    result.verdict = Verdict::Undefined;
  }
  return result;
}

}  // namespace

DjNmrResult dj_nmr_run(const DiagonalSignOperator& oracle,
                       const SpinSystem& system,
                       const ImperfectionModel& model, bool methyl_expand) {
  return run_nmr(oracle, system, model, methyl_expand);
}

DjNmrResult dj_nmr_run(const Table1Id& id, const SpinSystem& system,
                       const ImperfectionModel& model, bool methyl_expand) {
  return run_nmr(table1_operator(id), system, model, methyl_expand);
}

std::string spectrum_csv(const std::vector<SpectrumLine>& lines) {
  std::string out = "spin,frequency_hz,re,im,phase_class\n";
  char buf[160];
  for (const SpectrumLine& l : lines) {
    std::snprintf(buf, sizeof buf, "%s,%.17g,%.17g,%.17g,%s\n",
                  l.spin.c_str(), l.frequency_hz, l.amplitude.real(),
                  l.amplitude.imag(), to_string(l.phase_class).c_str());
    out += buf;
  }
  return out;
}

}  // namespace nmrdj
