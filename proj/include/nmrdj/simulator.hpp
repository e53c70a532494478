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

#include "nmrdj/oracle.hpp"
#include "nmrdj/pulse.hpp"
#include "nmrdj/spin_system.hpp"

namespace nmrdj {

class StateVector {
 public:
  StateVector(int n, CVector amplitudes);  // norm must be 1 within 1e-12
  static StateVector ground(int n);        // |00...0>

  int num_qubits() const { return n_; }
  const CVector& amplitudes() const { return amps_; }

 private:
  int n_;
  CVector amps_;
};

/// Traceless Hermitian part of an NMR density matrix; carries all
/// observable signal. Magnitude is not normalized.
class DeviationDensityMatrix {
 public:
  DeviationDensityMatrix(int n, CMatrix rho);

  int num_qubits() const { return n_; }
  const CMatrix& matrix() const { return rho_; }

 private:
  int n_;
  CMatrix rho_;
};

/// Pulse-angle miscalibration: every RF angle is scaled by (1 + epsilon)
/// before exponentiation. Coupling gates are unaffected.
struct ImperfectionModel {
  double epsilon = 0.0;

  double angle_scale() const;  // validates |epsilon| < 0.5
};

enum class PhaseClass { Absorptive, Emissive, Mixed };
std::string to_string(PhaseClass c);

struct SpectrumLine {
  std::string spin;
  double frequency_hz = 0.0;
  Complex amplitude;
  PhaseClass phase_class = PhaseClass::Mixed;
};

/// Whether the readout applies its own excitation. A longitudinal state
/// (thermal equilibrium) needs the selective (pi/2)_y pulse; a state that
/// is already transverse is read directly, the readout pulse having
/// cancelled the circuit's final inverse pseudo-Hadamard.
enum class ReadoutPulse { SelectiveY90, None };

enum class Verdict { Constant, Balanced, Undefined };
std::string to_string(Verdict v);

inline constexpr double IDEAL_PHASE_TOL = 1e-6;   // radians
inline constexpr double LOOSE_PHASE_TOL = 0.2;    // used when epsilon != 0

struct PureDjResult {
  std::string outcome_bits;  // qubit 1 first
  Verdict verdict = Verdict::Undefined;
  double outcome_probability = 0.0;
  int oracle_calls = 0;
  bool promise_violated = false;  // input was Neither-class
};

/// The ideal-circuit run: |0..0> -> h on all qubits -> phase oracle ->
/// h^-1 on all qubits -> measure. h is the pseudo-Hadamard Ry(pi/2).
/// Constant iff the outcome is all-zeros with probability 1 within 1e-9.
/// A Neither-class input is flagged and the verdict left Undefined.
PureDjResult pure_dj_run(const BooleanFunction& f);

/// Thermal-equilibrium deviation state sum_k gamma_k Z^(k).
DeviationDensityMatrix thermal_state(const SpinSystem& system);

StateVector apply(const PulseSequence& ps, const StateVector& state,
                  const ImperfectionModel& model = {});
StateVector apply(const UnitaryMatrix& u, const StateVector& state);
DeviationDensityMatrix apply(const PulseSequence& ps,
                             const DeviationDensityMatrix& rho,
                             const ImperfectionModel& model = {});
DeviationDensityMatrix apply(const UnitaryMatrix& u,
                             const DeviationDensityMatrix& rho);

/// Multiplet of one spin: one line per spectator configuration, amplitude
/// 2 rho[idx(m, k=0), idx(m, k=1)] and frequency nu_k plus half the sum of
/// signed J couplings (+J/2 for a |0> spectator). With methyl_expand, a
/// multiplicity-3 spectator's doublet becomes the merged 1:3:3:1 quartet
/// at offsets (+-3J/2, +-J/2).
std::vector<SpectrumLine> readout_spectrum(
    const DeviationDensityMatrix& rho, int spin, const SpinSystem& system,
    bool methyl_expand = false,
    ReadoutPulse pulse = ReadoutPulse::SelectiveY90,
    double phase_tol = IDEAL_PHASE_TOL);

struct DjNmrResult {
  Verdict verdict = Verdict::Undefined;
  int oracle_calls = 0;
  double phase_tol = IDEAL_PHASE_TOL;
  std::vector<std::vector<SpectrumLine>> spectra;  // indexed by spin - 1
};

/// The experiment: thermal state, (pi/2)_y on all spins, one application
/// of the compiled oracle, then per-spin readout with no further pulses.
/// Constant iff every line is absorptive, balanced iff at least one line
/// is emissive. Under ideal pulses a mixed line throws; with epsilon != 0
/// classification is ran at the loose tolerance.
DjNmrResult dj_nmr_run(const DiagonalSignOperator& oracle,
                       const SpinSystem& system,
                       const ImperfectionModel& model = {},
                       bool methyl_expand = false);
DjNmrResult dj_nmr_run(const Table1Id& id, const SpinSystem& system,
                       const ImperfectionModel& model = {},
                       bool methyl_expand = false);

/// CSV with header "spin,frequency_hz,re,im,phase_class".
std::string spectrum_csv(const std::vector<SpectrumLine>& lines);

}  // namespace nmrdj
