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


#include "nhqc/synthesis/gate_synthesis.hpp"

#include "nhqc/core/errors.hpp"

#include <cmath>

namespace nhqc::synthesis {

using core::kI;
using core::kPi;

void GateSpec::validate() const {
  if (!(gamma > 0.0 && gamma < 2.0 * kPi)) {
    throw DomainError("gamma must lie in (0, 2pi); identity gates are excluded");
  }
  if (!(theta >= 0.0 && theta <= kPi)) throw ValidationError("theta must lie in [0, pi]");
  if (!std::isfinite(phi)) throw ValidationError("phi must be finite");
}

namespace {

void check_gamma(double gamma) {
  if (!(gamma > 0.0 && gamma < 2.0 * kPi)) {
    throw DomainError("gamma must lie in (0, 2pi); identity gates are excluded");
  }
}

// eta = x - Delta2 for the admissible root x of the constraint quadratic.
// Its roots are x = Delta2 + (k Delta2 +- sqrt(k (pi^2 Delta2^2 + (pi^2 - k) Omega^2))) / (pi^2 - k),
// and since the square root exceeds |k Delta2| the sign filter picks the
// +root for gamma > pi and the -root for gamma < pi.
double solve_eta(double gamma, double delta2, double omega) {
  if (gamma == kPi) return 0.0;
  const double pi2 = kPi * kPi;
  const double k = (gamma - kPi) * (gamma - kPi);
  const double root = std::sqrt(k * (pi2 * delta2 * delta2 + (pi2 - k) * omega * omega));
  const double sign = gamma > kPi ? 1.0 : -1.0;
  return (k * delta2 + sign * root) / (pi2 - k);
}

Operator xi_block(double xi, double chi) {
  Operator m(2, 2);
  const double s = std::sin(xi);
  const double c = std::cos(xi);
  m << c + kI * s * std::cos(chi / 2.0), -kI * s * std::sin(chi / 2.0),
      -kI * s * std::sin(chi / 2.0), c - kI * s * std::cos(chi / 2.0);
  return m;
}

Operator z_phase(double angle) {
  Operator d = Operator::Zero(2, 2);
  d(0, 0) = std::exp(-kI * angle);
  d(1, 1) = std::exp(kI * angle);
  return d;
}

}  // namespace

DriveSolution solve_toc_parameters(double gamma, double delta2, double omega) {
  check_gamma(gamma);
  if (!(omega > 0.0) || !std::isfinite(omega)) throw ValidationError("Omega must be positive");
  if (!std::isfinite(delta2)) throw ValidationError("Delta2 must be finite");
  DriveSolution sol;
  sol.omega = omega;
  sol.delta2 = delta2;
  sol.eta = solve_eta(gamma, delta2, omega);
  const double x = sol.eta + delta2;
  sol.c = (sol.eta - delta2) / omega;
  sol.tau = 2.0 * kPi / std::hypot(omega, x);
  sol.xi = std::hypot(omega, x) * sol.tau / 2.0;
  sol.chi = 2.0 * std::atan2(omega, x);
  return sol;
}

double tau_closed_form(double gamma, double delta2, double eta, double omega) {
  if (eta == 0.0) throw DomainError("tau_closed_form requires eta != 0");
  const double r = (gamma / kPi - 1.0) * (1.0 + delta2 / eta);
  return 2.0 * kPi / omega * std::sqrt(1.0 - r * r);
}

DriveSolution toc_baseline(const GateSpec& spec, double omega) {
  spec.validate();
  return solve_toc_parameters(spec.gamma, 0.0, omega);
}

TwoQubitDriveSolution solve_two_qubit_parameters(double gamma_prime, double g, double delta3) {
  check_gamma(gamma_prime);
  if (!(g > 0.0) || !std::isfinite(g)) throw ValidationError("g must be positive");
  // The pair Hamiltonian is the single-qubit one with Omega = 2g,
  // Delta2 = Delta3' and phi1 = -eta' t, so gamma_s = 2pi - gamma'.
  const DriveSolution s = solve_toc_parameters(2.0 * kPi - gamma_prime, delta3, 2.0 * g);
  TwoQubitDriveSolution out;
  out.g = g;
  out.delta3 = delta3;
  out.eta = -s.eta;
  out.tau = s.tau;
  out.gamma = kPi + out.eta * out.tau / 2.0;
  out.j = std::hypot(g, (delta3 - out.eta) / 2.0);
  out.xi = out.j * out.tau;
  out.chi = 2.0 * std::atan2(2.0 * g, delta3 - out.eta);
  return out;
}

Operator analytic_unitary(const DriveSolution& sol) {
  return z_phase(sol.eta * sol.tau / 2.0) * xi_block(sol.xi, sol.chi);
}

Operator holonomic_gate(const GateSpec& spec) {
  spec.validate();
  const double nx = std::sin(spec.theta) * std::cos(spec.phi);
  const double ny = std::sin(spec.theta) * std::sin(spec.phi);
  const double nz = -std::cos(spec.theta);
  const Operator n_sigma = nx * core::pauli_x() + ny * core::pauli_y() + nz * core::pauli_z();
  const double half = spec.gamma / 2.0;
  return std::exp(-kI * half) *
         (std::cos(half) * core::identity(2) - kI * std::sin(half) * n_sigma);
}

Operator lift_dressed_operator(const Operator& u_b2, double theta, double phi) {
  if (u_b2.rows() != 2 || u_b2.cols() != 2) throw ValidationError("expected a {b, 2} operator");
  Operator inner = Operator::Zero(3, 3);
  inner(0, 0) = u_b2(0, 0);
  inner(0, 2) = u_b2(0, 1);
  inner(2, 0) = u_b2(1, 0);
  inner(2, 2) = u_b2(1, 1);
  inner(1, 1) = 1.0;
  const Operator b = delta::dressed_basis(theta, phi).matrix();
  return b * inner * b.adjoint();
}

Operator holonomic_gate(const GateSpec& spec, double delta2, double omega) {
  spec.validate();
  const DriveSolution sol = solve_toc_parameters(spec.gamma, delta2, omega);
  return lift_dressed_operator(analytic_unitary(sol), spec.theta, spec.phi).topLeftCorner(2, 2);
}

SingleLoopResult single_loop_baseline(const GateSpec& spec, double omega) {
  spec.validate();
  if (!(omega > 0.0)) throw ValidationError("Omega must be positive");
  const Pulse pulse = make_pulse(Scheme::SingleLoop, spec, 0.0, omega);
  const delta::RotatingFrameParams params = pulse.rotating_params();
  const double half = pulse.tau / 2.0;
  // Each segment is time independent, so the exponentials are exact.
  const Operator h1 = delta::rotating_frame_hamiltonian(params, 0.25 * pulse.tau);
  const Operator h2 = delta::rotating_frame_hamiltonian(params, 0.75 * pulse.tau);
  return {core::matrix_exponential(h2, half) * core::matrix_exponential(h1, half), pulse.tau};
}

Operator two_qubit_gate(double gamma_prime) {
  check_gamma(gamma_prime);
  Operator u = core::identity(4);
  u(2, 2) = std::exp(kI * gamma_prime);
  return u;
}

Operator two_qubit_effective_hamiltonian(const TwoQubitDriveSolution& sol, double t) {
  Operator h(2, 2);
  const core::Complex coupling = sol.g * std::exp(kI * sol.eta * t);
  h << -sol.delta3 / 2.0, coupling, std::conj(coupling), sol.delta3 / 2.0;
  return h;
}

Operator two_qubit_analytic_unitary(const TwoQubitDriveSolution& sol) {
  return z_phase(-sol.eta * sol.tau / 2.0) * xi_block(sol.xi, sol.chi);
}

std::string to_string(Scheme scheme) {
  switch (scheme) {
    case Scheme::Ours: return "ours";
    case Scheme::TocBaseline: return "toc_baseline";
    case Scheme::SingleLoop: return "single_loop";
  }
  return "unknown";
}

Scheme scheme_from_string(const std::string& name) {
  if (name == "ours") return Scheme::Ours;
  if (name == "toc_baseline" || name == "toc") return Scheme::TocBaseline;
  if (name == "single_loop" || name == "single") return Scheme::SingleLoop;
  throw ValidationError("unknown scheme '" + name + "'");
}

delta::PhaseRamp Pulse::phase_ramp() const {
  if (scheme == Scheme::SingleLoop) {
    const double half = tau / 2.0;
    const double second = kPi + spec.gamma;
    return [half, second](double t) { return t < half ? 0.0 : second; };
  }
  return delta::linear_ramp(eta);
}

delta::RotatingFrameParams Pulse::rotating_params() const {
  return delta::RotatingFrameParams(omega, spec.theta, spec.phi, delta2, phase_ramp());
}

std::vector<double> Pulse::breakpoints() const {
  if (scheme == Scheme::SingleLoop) return {tau / 2.0};
  return {};
}

Pulse make_pulse(Scheme scheme, const GateSpec& spec, double delta2, double omega) {
  spec.validate();
  if (!(omega > 0.0)) throw ValidationError("Omega must be positive");
  Pulse p;
  p.scheme = scheme;
  p.spec = spec;
  p.omega = omega;
  switch (scheme) {
    case Scheme::Ours: {
      const DriveSolution s = solve_toc_parameters(spec.gamma, delta2, omega);
      p.delta2 = delta2;
      p.eta = s.eta;
      p.tau = s.tau;
      break;
    }
    case Scheme::TocBaseline: {
      const DriveSolution s = toc_baseline(spec, omega);
      p.eta = s.eta;
      p.tau = s.tau;
      break;
    }
    case Scheme::SingleLoop:
      p.tau = 2.0 * kPi / omega;
      break;
  }
  return p;
}

core::Schedule rotating_schedule(const Pulse& pulse) {
  core::Schedule s = delta::rotating_schedule(pulse.rotating_params(), pulse.tau);
  s.breakpoints = pulse.breakpoints();
  return s;
}

core::Schedule effective_schedule(const Pulse& pulse) {
  core::Schedule s = delta::effective_schedule(pulse.rotating_params(), pulse.tau);
  s.breakpoints = pulse.breakpoints();
  return s;
}

nlohmann::json to_json(const GateSpec& spec) {
  return {{"gamma", spec.gamma}, {"theta", spec.theta}, {"phi", spec.phi}};
}

nlohmann::json to_json(const DriveSolution& sol) {
  return {{"omega", sol.omega}, {"delta2", sol.delta2}, {"eta", sol.eta},
          {"c", sol.c},         {"tau", sol.tau},       {"xi", sol.xi},
          {"chi", sol.chi},     {"gamma", sol.gamma()}, {"tau_over_tauc", sol.tau_over_tauc()}};
}

nlohmann::json to_json(const TwoQubitDriveSolution& sol) {
  return {{"g", sol.g},     {"delta3", sol.delta3}, {"eta", sol.eta}, {"tau", sol.tau},
          {"gamma", sol.gamma}, {"xi", sol.xi},     {"chi", sol.chi}, {"j", sol.j}};
}

}  // namespace nhqc::synthesis
