// Copyright 2026 The nhqc Authors
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

#include "nhqc/core/linalg.hpp"
#include "nhqc/core/schedule.hpp"
#include "nhqc/synthesis/gate_synthesis.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace nhqc::transmon {

using core::Operator;
using core::StateVector;
using synthesis::GateSpec;

/// Angular frequency in rad/ns for a value in GHz.
inline constexpr double ghz(double v) { return 2.0 * core::kPi * v; }

inline constexpr double kJ1PeakArgument = 1.8411837813406593;
inline constexpr double kJ1Peak = 0.5818652242815964;

/// Bessel function of the first kind J1 on |x| <= 10; DomainError beyond.
double bessel_j1(double x);

/// The unique beta in [0, 1.8412) with J1(beta) = value (bisection, 1e-14).
/// CapabilityError when value exceeds the J1 peak.
double inverse_bessel_j1(double value);

struct TransmonParams {
  double omega_q = 0.0;  // 0-1 transition
  double alpha = 0.0;    // |2> sits at 2 omega_q - alpha

  void validate() const;
};

/// omega_q(t) = omega_q + epsilon sin(nu t + phase0 + phase_rate t).
struct ParametricDrive {
  double epsilon = 0.0;
  double nu = 0.0;
  double phase0 = 0.0;
  double phase_rate = 0.0;

  double phase(double t) const { return phase0 + phase_rate * t; }
  double beta() const { return nu == 0.0 ? 0.0 : epsilon / nu; }
  double detuning(double t) const;
};

/// Transmon lattice in rad/ns. Single unit T1, Ta, T2; the pair gate uses T2, T3.
struct LatticeConfig {
  TransmonParams t1;
  TransmonParams ta;
  TransmonParams t2;
  TransmonParams t3;
  double g1a = 0.0;
  double ga2 = 0.0;
  double g12 = 0.0;
  double g23 = 0.0;
  /// Drive scale Omega of the single-qubit gates.
  double omega = 0.0;
  /// Modulation index of the T3 drive for the pair gate.
  double beta3 = 0.0;

  void validate() const;
  static LatticeConfig default_lattice();

  /// Frequency offsets from the unit's mean frequency and anharmonicities
  /// scaled by `factor`; couplings and Omega unchanged.
  LatticeConfig scaled_separations(double factor) const;
};

/// 27-dim index of |n1 na n2>.
constexpr std::size_t unit_index(int n1, int na, int n2) {
  return static_cast<std::size_t>(n1 * 9 + na * 3 + n2);
}
/// 9-dim index of |n2 n3>.
constexpr std::size_t pair_index(int n2, int n3) { return static_cast<std::size_t>(n2 * 3 + n3); }

inline constexpr std::size_t kZeroL = unit_index(1, 0, 0);
inline constexpr std::size_t kOneL = unit_index(0, 0, 1);
inline constexpr std::size_t kAuxE = unit_index(0, 1, 0);

/// {|00>_L, |01>_L, |10>_L, |11>_L, |f>_L} as T2 T3 states.
inline constexpr std::array<std::size_t, 5> kPairLogical = {pair_index(0, 1), pair_index(0, 0),
                                                            pair_index(1, 1), pair_index(1, 0),
                                                            pair_index(2, 0)};

/// sigma = |0><1| + sqrt(2)|1><2| on one transmon.
Operator lowering();

struct UnitDrives {
  ParametricDrive t1;
  ParametricDrive t2;
};

/// Lab-frame three-transmon Hamiltonian including |2> levels and
/// counter-rotating coupling terms.
Operator physical_hamiltonian_single_unit(const LatticeConfig& cfg, const UnitDrives& drives, double t);

/// Parameters mapping a holonomic gate onto the parametric drives.
struct DriveMapping {
  GateSpec spec;
  double omega = 0.0;
  double delta2 = 0.0;
  double eta = 0.0;
  double tau = 0.0;
  std::array<double, 3> frame_detunings{};  // Delta'_1, Delta'_a, Delta'_2
  double beta1 = 0.0;
  double beta2 = 0.0;
  double nu1 = 0.0;
  double nu2 = 0.0;
  double g12_required = 0.0;
  double g12_configured = 0.0;
  /// |configured - required| / max(|required|, |configured|); 0 when both vanish.
  double g12_residual = 0.0;
  bool g12_within_tolerance = true;

  /// phi'_1(t) = phi0(t) = phi + eta t and phi'_2(t) = -phi1(t) = -eta t.
  double phi_prime1(double t) const;
  double phi_prime2(double t) const;
  /// Physical drives with phi_1 = phi'_1 - pi/2 and phi_2 = phi'_2 + pi/2.
  UnitDrives drives() const;
};

inline constexpr double kG12Tolerance = 0.05;

/// CapabilityError when a required J1 value exceeds the J1 peak.
DriveMapping map_gate_to_drives(const GateSpec& spec, double delta2, double omega, const LatticeConfig& cfg);

/// Effective Delta-type Hamiltonian on {|0>_L, |e>_L, |1>_L}.
Operator effective_logical_hamiltonian(const LatticeConfig& cfg, const DriveMapping& mapping, double t);

/// Reorders an operator on {|0>_L, |e>_L, |1>_L} to {|0>, |1>, |2>}.
Operator to_delta_ordering(const Operator& logical);

/// Frame Hamiltonian of the single unit: the lab Hamiltonian transformed by
///   U1(t) = exp(-i sum_j [(w_j - D'_j) n1_j + (2 w_j - a_j - D'_j) n2_j] t)
///         exp(i sum_{j=1,2} beta_j cos(nu_j t + phi_j(t)) N_j).
Operator unit_frame_hamiltonian(const LatticeConfig& cfg, const DriveMapping& mapping, double t);

core::Schedule unit_frame_schedule(const LatticeConfig& cfg, const DriveMapping& mapping);

struct LeakageSample {
  double t;
  double pop_single_excitation;
  double pop_double_excitation;
  double pop_level2;
};

struct SimulationOptions {
  std::optional<double> step;
  int leakage_samples = 200;
};

inline constexpr double kLeakageFlag = 0.10;

struct LogicalGateResult {
  DriveMapping mapping;
  Operator unitary;  // on {|0>_L, |e>_L, |1>_L}
  Operator gate;     // 2x2 block on S1
  double fidelity = 0.0;
  std::vector<LeakageSample> leakage;
  double max_leakage = 0.0;
  bool flagged = false;
};

/// Integrates the 27-dim frame Hamiltonian and compares the S1 block with
/// the holonomic gate. Leakage populations are averaged over |0>_L and |1>_L.
LogicalGateResult simulate_logical_gate(const GateSpec& spec, double delta2, double omega,
                                        const LatticeConfig& cfg, const SimulationOptions& options = {});

/// Same integration for a fixed mapping (couplings taken from cfg, g12 from the mapping).
LogicalGateResult simulate_mapping(const LatticeConfig& cfg, const DriveMapping& mapping,
                                   const SimulationOptions& options = {});

struct PairResult {
  synthesis::TwoQubitDriveSolution solution;
  double nu3 = 0.0;
  Operator unitary;  // on {|00>_L, |01>_L, |10>_L, |11>_L, |f>_L}
  Operator gate;     // 4x4 block on S2
  double fidelity = 0.0;
};

/// Interaction-picture Hamiltonian of T2, T3 with the T3 drive.
Operator pair_frame_hamiltonian(const LatticeConfig& cfg, const synthesis::TwoQubitDriveSolution& sol,
                                double nu3, double t);

/// Controlled phase gate on T2, T3. CapabilityError unless
/// |Delta3'| < min(|Delta23|, alpha2) / 10.
PairResult two_qubit_physical(const LatticeConfig& cfg, double gamma_prime, double delta3,
                              const SimulationOptions& options = {});

/// a|1>_1 + b|0>_1 (Ta, T2 in |0>) -> a|0>_L + b|1>_L via NOT on T2 then CNOT(T1 -> T2).
StateVector encode_logical(const StateVector& physical);
StateVector decode_logical(const StateVector& logical);

/// 27-dim state a|1>_1 + b|0>_1 with Ta, T2 in |0>.
StateVector physical_qubit_state(core::Complex a, core::Complex b);

}  // namespace nhqc::transmon
