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
#include "nhqc/delta/delta_system.hpp"

#include <json.hpp>

#include <string>

namespace nhqc::synthesis {

using core::Operator;

/// Target holonomic gate e^{-i gamma}|b><b| + |d><d| with gamma in (0, 2pi).
struct GateSpec {
  double gamma = 0.0;
  double theta = 0.0;
  double phi = 0.0;

  static GateSpec rx(double angle) { return {angle, core::kPi / 2.0, core::kPi}; }
  static GateSpec ry(double angle) { return {angle, core::kPi / 2.0, core::kPi / 2.0}; }
  static GateSpec rz(double angle) { return {angle, core::kPi, core::kPi}; }

  /// DomainError for gamma outside (0, 2pi), ValidationError for theta outside [0, pi].
  void validate() const;
};

/// Square-pulse solution with xi = pi and gamma = pi + eta tau / 2.
struct DriveSolution {
  double omega = 0.0;
  double delta2 = 0.0;
  double eta = 0.0;
  double c = 0.0;
  double tau = 0.0;
  double xi = 0.0;
  double chi = 0.0;

  double gamma() const noexcept { return core::kPi + eta * tau / 2.0; }
  double tau_c() const noexcept { return 2.0 * core::kPi / omega; }
  double tau_over_tauc() const noexcept { return tau / tau_c(); }
};

struct TwoQubitDriveSolution {
  double g = 0.0;
  double delta3 = 0.0;
  double eta = 0.0;
  double tau = 0.0;
  double gamma = 0.0;
  double xi = 0.0;
  double chi = 0.0;
  double j = 0.0;
};

/// Solves {xi = pi, gamma = pi + eta tau/2} for (eta, tau).
///
/// With x = eta + Delta2 and k = (gamma - pi)^2 the system reduces to
///   (pi^2 - k) x^2 - 2 pi^2 Delta2 x + pi^2 Delta2^2 - k Omega^2 = 0,
/// of which exactly one root has sign(x - Delta2) = sign(gamma - pi).
/// gamma = pi gives eta = 0. Then tau = 2 pi / sqrt(Omega^2 + x^2).
DriveSolution solve_toc_parameters(double gamma, double delta2, double omega);

/// tau_c sqrt(1 - (gamma/pi - 1)^2 (1 + Delta2/eta)^2); DomainError when eta = 0.
double tau_closed_form(double gamma, double delta2, double eta, double omega);

/// Resonant (Delta2 = 0) time-optimal scheme.
DriveSolution toc_baseline(const GateSpec& spec, double omega);

/// Two-qubit phase gate: solves {xi' = pi, gamma' = pi + eta' tau'/2} with
/// xi' = J' tau', J' = sqrt(g^2 + ((Delta3' - eta')/2)^2).
TwoQubitDriveSolution solve_two_qubit_parameters(double gamma_prime, double g, double delta3);

/// exp(-i (eta tau / 2) sigma_z) M(xi, chi) on {|b>, |2>}.
Operator analytic_unitary(const DriveSolution& sol);

/// e^{-i gamma/2} exp(-i (gamma/2) n.sigma), n = (sin th cos ph, sin th sin ph, -cos th).
Operator holonomic_gate(const GateSpec& spec);

/// Computational gate realised by the solved pulse: u_bb |b><b| + |d><d|
/// with u_bb taken from analytic_unitary.
Operator holonomic_gate(const GateSpec& spec, double delta2, double omega);

/// Lifts a {|b>, |2>} operator acting with identity on |d> to {|0>, |1>, |2>}.
Operator lift_dressed_operator(const Operator& u_b2, double theta, double phi);

struct SingleLoopResult {
  Operator unitary;  // 3x3 on {|0>, |1>, |2>}
  double tau_c;
};

/// Two resonant pi-area segments of length tau_c/2 with coupling phases 0
/// and pi + gamma.
SingleLoopResult single_loop_baseline(const GateSpec& spec, double omega);

/// diag(1, 1, e^{i gamma'}, 1) on {|00>_L, |01>_L, |10>_L, |11>_L}.
Operator two_qubit_gate(double gamma_prime);

/// [[-Delta3'/2, g e^{i eta' t}], [g e^{-i eta' t}, Delta3'/2]] on {|10>_L, |f>_L}.
Operator two_qubit_effective_hamiltonian(const TwoQubitDriveSolution& sol, double t);

/// exp(+i (eta' tau'/2) sigma_z) M(xi', chi'); diag(e^{i gamma'}, e^{-i gamma'}) at xi' = pi.
Operator two_qubit_analytic_unitary(const TwoQubitDriveSolution& sol);

enum class Scheme { Ours, TocBaseline, SingleLoop };

std::string to_string(Scheme scheme);
Scheme scheme_from_string(const std::string& name);

/// A solved square pulse for one scheme. Single-loop pulses switch the
/// coupling phase from 0 to pi + gamma at tau_c / 2.
struct Pulse {
  Scheme scheme = Scheme::Ours;
  GateSpec spec;
  double omega = 0.0;
  double delta2 = 0.0;
  double eta = 0.0;
  double tau = 0.0;

  delta::PhaseRamp phase_ramp() const;
  delta::RotatingFrameParams rotating_params() const;
  std::vector<double> breakpoints() const;
  double tau_over_tauc() const { return tau * omega / (2.0 * core::kPi); }
};

/// delta2 is ignored for the two baselines.
Pulse make_pulse(Scheme scheme, const GateSpec& spec, double delta2, double omega);

core::Schedule rotating_schedule(const Pulse& pulse);
core::Schedule effective_schedule(const Pulse& pulse);

nlohmann::json to_json(const GateSpec& spec);
nlohmann::json to_json(const DriveSolution& sol);
nlohmann::json to_json(const TwoQubitDriveSolution& sol);

}  // namespace nhqc::synthesis
