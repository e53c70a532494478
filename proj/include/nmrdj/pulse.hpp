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
#include <variant>
#include <vector>

#include "nmrdj/parity.hpp"
#include "nmrdj/spin_system.hpp"
#include "nmrdj/topology.hpp"

namespace nmrdj {

enum class RfAxis { Transverse, Z };

/// Single-spin rotation by `angle` about an axis: either in the transverse
/// plane at azimuth `phi` (phi = pi/2 is +y) or the z axis. Implements
/// exp(-i angle (sigma . axis) / 2); angles are kept in (-2pi, 2pi].
struct RfGate {
  int spin = 0;
  RfAxis axis = RfAxis::Transverse;
  double phi = 0.0;    // meaningful for Transverse only
  double angle = 0.0;
};

/// Scalar-coupling gate exp(-i angle sigma_z^(k) sigma_z^(l)) on an
/// adjacent chain pair. Duration is the free-evolution time realizing the
/// angle under the pair's J coupling; zero until annotated.
struct ZzGate {
  int k = 0;
  int l = 0;
  double angle = 0.0;
  double duration_s = 0.0;
};

using NativeGate = std::variant<RfGate, ZzGate>;

/// Time-ordered native gates plus an accumulated scalar phase: the sequence
/// unitary is e^{i global_phase} G_m ... G_1 for gates [G_1..G_m].
struct PulseSequence {
  int n = 0;
  std::vector<NativeGate> gates;
  double global_phase = 0.0;

  explicit PulseSequence(int register_size) : n(register_size) {}

  std::size_t size() const { return gates.size(); }
  void push(NativeGate g);                 // validates spins/adjacency
  void append(const PulseSequence& tail);  // register sizes must match

  int rf_count() const;
  int zz_count() const;
};

/// 2x2 matrix of an RF gate, with the angle scaled by `angle_scale`
/// (the pulse miscalibration model).
Mat2 rf_matrix(const RfGate& g, double angle_scale = 1.0);

/// Dense unitary of a sequence, global phase included.
CMatrix sequence_unitary(const PulseSequence& ps, double angle_scale = 1.0);

/// In-place kernels used by both the compiler checks and the simulator.
void apply_gate_in_place(const NativeGate& g, CVector& state, int n,
                         double angle_scale = 1.0);
void apply_gate_left_in_place(const NativeGate& g, CMatrix& m, int n,
                              double angle_scale = 1.0);

/// CNOT between adjacent spins over the native set: four RF rotations
/// around one ZZ(pi/4) gate, exactly equal (phase included) to the
/// canonical CNOT matrix. Throws on non-adjacent pairs.
PulseSequence compile_cnot(int control, int target,
                           const CouplingTopology& topo);

/// SWAP as three CNOTs.
PulseSequence compile_swap(int k, int l, const CouplingTopology& topo);

/// exp(i theta Z_S) on a linear chain: SWAP-route the support into a
/// contiguous segment (gathering toward the lowest support position),
/// fold parity onto the segment's right end with a CNOT ladder, rotate,
/// then unfold and unroute. Exactly equals parity_phase_unitary(g).
PulseSequence compile_parity_phase(const ParityPhaseGate& g,
                                   const CouplingTopology& topo);

/// Any +/-1 diagonal via its product-operator spectrum: scalar prefix
/// pi/2, then one parity-phase compilation per nonempty term (S, c) with
/// angle -(pi/2) c; the empty term only shifts the scalar phase.
PulseSequence compile_diagonal(const DiagonalSignOperator& d,
                               const CouplingTopology& topo);

/// Peephole pass: merges adjacent same-spin same-axis RF rotations and
/// same-pair ZZ gates, drops zero-angle gates. Never changes the sequence
/// unitary and never increases the gate count.
PulseSequence simplify(const PulseSequence& ps);

struct SequenceStats {
  int rf_count = 0;
  int zz_count = 0;
  double total_j_seconds = 0.0;
  int phase_inverted_zz = 0;  // gates timed via the theta + pi equivalent
};

/// Gate counts and total J-evolution time. A ZZ angle theta maps to the
/// free-evolution time 2 theta / (pi J); angles whose direct time would be
/// negative are timed with the theta + pi equivalent (same unitary up to
/// global phase) and flagged. Throws if a used pair has J = 0.
SequenceStats sequence_stats(const PulseSequence& ps, const SpinSystem& system);

/// Copy of the sequence with ZZ durations filled in from the system.
PulseSequence annotate_durations(const PulseSequence& ps,
                                 const SpinSystem& system);

/// Line-oriented text format: header "# n=<n> global_phase=<rad>", then one
/// gate per line, "RF spin axis angle" (axis is the transverse azimuth in
/// radians, or the literal token "z") or "ZZ k l angle duration". Decimals
/// carry 17 significant digits and round-trip exactly.
std::string write_sequence(const PulseSequence& ps);
PulseSequence parse_sequence(const std::string& text);

}  // namespace nmrdj
