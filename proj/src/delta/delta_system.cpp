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


#include "nhqc/delta/delta_system.hpp"

#include "nhqc/core/errors.hpp"
#include "nhqc/core/propagator.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace nhqc::delta {

using core::kI;
using core::kPi;

double wrap_phase(double phi) {
  if (!std::isfinite(phi)) throw ValidationError("phase must be finite");
  double w = std::remainder(phi, 2.0 * kPi);
  if (w <= -kPi) w += 2.0 * kPi;
  return w;
}

PhaseRamp linear_ramp(double eta) {
  return [eta](double t) { return eta * t; };
}

RotatingFrameParams::RotatingFrameParams(double omega, double theta, double phi, double delta2,
                                         PhaseRamp phase_ramp)
    : omega_(omega), theta_(theta), phi_(wrap_phase(phi)), delta2_(delta2),
      phase_ramp_(std::move(phase_ramp)) {
  if (!(omega >= 0.0) || !std::isfinite(omega)) throw ValidationError("Omega must be finite and >= 0");
  if (!(theta >= 0.0 && theta <= kPi)) throw ValidationError("theta must lie in [0, pi]");
  if (!std::isfinite(delta2)) throw ValidationError("Delta2 must be finite");
  if (!phase_ramp_) throw ValidationError("phase ramp is required");
}

double RotatingFrameParams::omega0() const { return omega_ * std::sin(theta_ / 2.0); }
double RotatingFrameParams::omega1() const { return omega_ * std::cos(theta_ / 2.0); }
double RotatingFrameParams::omega2() const {
  return -delta2_ * std::sin(theta_ / 2.0) * std::cos(theta_ / 2.0);
}
double RotatingFrameParams::delta0() const {
  const double s = std::sin(theta_ / 2.0);
  return -delta2_ * s * s;
}
double RotatingFrameParams::delta1() const {
  const double c = std::cos(theta_ / 2.0);
  return -delta2_ * c * c;
}

void LabFrameConfig::validate() const {
  const auto& v = drive_frequencies;
  const double scale = std::max({1.0, std::abs(v[0]), std::abs(v[1]), std::abs(v[2])});
  if (std::abs(v[0] - v[1] - v[2]) > 1e-12 * scale) {
    throw ValidationError("lab frame requires upsilon0 = upsilon1 + upsilon2");
  }
  for (const auto& p : phases) {
    if (!p) throw ValidationError("lab frame drive phases are required");
  }
}

std::array<double, 3> LabFrameConfig::frame_energies() const {
  return {0.0, drive_frequencies[2], drive_frequencies[0]};
}

std::array<double, 3> LabFrameConfig::detunings() const {
  const auto w = frame_energies();
  return {2.0 * (level_energies[0] - w[0]), 2.0 * (level_energies[1] - w[1]),
          2.0 * (level_energies[2] - w[2])};
}

LabFrameConfig LabFrameConfig::from_rotating(const RotatingFrameParams& params, double upsilon1,
                                             double upsilon2) {
  LabFrameConfig cfg;
  cfg.drive_frequencies = {upsilon1 + upsilon2, upsilon1, upsilon2};
  const auto w = cfg.frame_energies();
  cfg.level_energies = {w[0] + params.delta0() / 2.0, w[1] + params.delta1() / 2.0,
                        w[2] + params.delta2() / 2.0};
  cfg.amplitudes = {params.omega0(), params.omega1(), params.omega2()};
  cfg.phases = {[params](double t) { return params.phi0(t); },
                [params](double t) { return params.phi1(t); },
                [phi = params.phi2()](double) { return phi; }};
  cfg.validate();
  return cfg;
}

Operator DressedBasis::matrix() const {
  Operator m(3, 3);
  m.col(0) = bright;
  m.col(1) = dark;
  m.col(2) = auxiliary;
  return m;
}

Operator lab_frame_hamiltonian(const LabFrameConfig& config, double t) {
  config.validate();
  Operator h = Operator::Zero(3, 3);
  for (int n = 0; n < 3; ++n) h(n, n) = config.level_energies[static_cast<std::size_t>(n)];
  const auto& a = config.amplitudes;
  const auto& v = config.drive_frequencies;
  const double c0 = a[0] * std::cos(v[0] * t - config.phases[0](t));
  const double c1 = a[1] * std::cos(v[1] * t - config.phases[1](t));
  const double c2 = a[2] * std::cos(v[2] * t - config.phases[2](t));
  h(2, 0) = h(0, 2) = c0;
  h(2, 1) = h(1, 2) = c1;
  h(1, 0) = h(0, 1) = c2;
  return h;
}

Operator frame_unitary(const LabFrameConfig& config, double t) {
  const auto w = config.frame_energies();
  Operator u = Operator::Zero(3, 3);
  for (int n = 0; n < 3; ++n) u(n, n) = std::exp(-kI * w[static_cast<std::size_t>(n)] * t);
  return u;
}

Operator rotating_frame_hamiltonian(const RotatingFrameParams& params, double t) {
  Operator h = Operator::Zero(3, 3);
  h(0, 0) = params.delta0() / 2.0;
  h(1, 1) = params.delta1() / 2.0;
  h(2, 2) = params.delta2() / 2.0;
  h(2, 0) = 0.5 * params.omega0() * std::exp(kI * params.phi0(t));
  h(2, 1) = 0.5 * params.omega1() * std::exp(kI * params.phi1(t));
  h(1, 0) = 0.5 * params.omega2() * std::exp(kI * params.phi2());
  h(0, 2) = std::conj(h(2, 0));
  h(1, 2) = std::conj(h(2, 1));
  h(0, 1) = std::conj(h(1, 0));
  return h;
}

DressedBasis dressed_basis(double theta, double phi) {
  if (!(theta >= 0.0 && theta <= kPi)) throw ValidationError("theta must lie in [0, pi]");
  const double s = std::sin(theta / 2.0);
  const double c = std::cos(theta / 2.0);
  DressedBasis b;
  b.bright = StateVector::Zero(3);
  b.dark = StateVector::Zero(3);
  b.auxiliary = StateVector::Zero(3);
  b.bright(0) = s * std::exp(-kI * phi);
  b.bright(1) = c;
  b.dark(0) = c;
  b.dark(1) = -s * std::exp(kI * phi);
  b.auxiliary(2) = 1.0;
  return b;
}

Operator effective_hamiltonian(const RotatingFrameParams& params, double t) {
  Operator h(2, 2);
  const double d = params.delta2();
  const core::Complex coupling = 0.5 * params.omega() * std::exp(-kI * params.phi1(t));
  h << -d / 2.0, coupling, std::conj(coupling), d / 2.0;
  return h;
}

Operator embed_effective(const Operator& h_eff) {
  if (h_eff.rows() != 2 || h_eff.cols() != 2) throw ValidationError("embed_effective expects 2x2");
  Operator out = Operator::Zero(3, 3);
  out(0, 0) = h_eff(0, 0);
  out(0, 2) = h_eff(0, 1);
  out(2, 0) = h_eff(1, 0);
  out(2, 2) = h_eff(1, 1);
  return out;
}

Operator to_dressed_frame(const Operator& h_rot, const DressedBasis& basis) {
  const Operator m = basis.matrix();
  return m.adjoint() * h_rot * m;
}

TocResiduals toc_constraint_residuals(const Operator& h_control, double omega) {
  if (h_control.rows() != 2 || h_control.cols() != 2) {
    throw ValidationError("toc_constraint_residuals expects a 2x2 control Hamiltonian");
  }
  const double l1 = 0.5 * ((h_control * h_control).trace().real() - 0.5 * omega * omega);
  const double l2 = (h_control * core::pauli_z()).trace().real();
  return {l1, l2};
}

TocResiduals toc_constraint_residuals(const RotatingFrameParams& params, double t) {
  const Operator dressed =
      to_dressed_frame(rotating_frame_hamiltonian(params, t), dressed_basis(params.theta(), params.phi()));
  Operator block(2, 2);
  block << dressed(0, 0), dressed(0, 2), dressed(2, 0), dressed(2, 2);
  const Operator h0 = -0.5 * params.delta2() * core::pauli_z();
  return toc_constraint_residuals(block - h0, params.omega());
}

core::Schedule rotating_schedule(const RotatingFrameParams& params, double duration) {
  core::Schedule s;
  s.duration = duration;
  s.hamiltonian_at = [params](double t) { return rotating_frame_hamiltonian(params, t); };
  s.recommended_step =
      core::default_step(duration, std::max(params.omega(), std::abs(params.delta2())));
  return s;
}

core::Schedule effective_schedule(const RotatingFrameParams& params, double duration) {
  core::Schedule s;
  s.duration = duration;
  s.hamiltonian_at = [params](double t) { return effective_hamiltonian(params, t); };
  s.recommended_step =
      core::default_step(duration, std::max(params.omega(), std::abs(params.delta2())));
  return s;
}

core::Schedule lab_schedule(const LabFrameConfig& config, double duration) {
  config.validate();
  double scale = 0.0;
  for (double w : config.level_energies) scale = std::max(scale, std::abs(w));
  for (double v : config.drive_frequencies) scale = std::max(scale, std::abs(v));
  core::Schedule s;
  s.duration = duration;
  s.hamiltonian_at = [config](double t) { return lab_frame_hamiltonian(config, t); };
  s.recommended_step = core::default_step(duration, scale);
  return s;
}

namespace {

constexpr double kProjectionFloor = 1e-6;

BlochPoint bloch_point(double t, const StateVector& psi) {
  const core::Complex a = psi(0);
  const core::Complex b = psi(1);
  const double p = std::norm(a) + std::norm(b);
  const double total = psi.squaredNorm();
  BlochPoint pt{t, 0.0, 0.0, 0.0, std::max(0.0, total - p), false};
  if (std::sqrt(p) < kProjectionFloor) {
    pt.flagged = true;
    return pt;
  }
  const core::Complex ab = std::conj(a) * b / p;
  pt.x = 2.0 * ab.real();
  pt.y = 2.0 * ab.imag();
  pt.z = (std::norm(a) - std::norm(b)) / p;
  return pt;
}

}  // namespace

std::vector<BlochPoint> bloch_trajectory(const core::Schedule& schedule, const StateVector& initial,
                                         int samples) {
  if (samples < 1) throw ValidationError("bloch_trajectory: samples must be positive");
  if (initial.size() != 3) throw ValidationError("bloch_trajectory: expects a 3-level state");
  if (std::abs(initial.norm() - 1.0) > 1e-12) throw ValidationError("bloch_trajectory: state not normalized");
  const double step = core::resolve_step(schedule, std::nullopt);
  std::vector<BlochPoint> out;
  out.reserve(static_cast<std::size_t>(samples) + 1);
  StateVector psi = initial;
  out.push_back(bloch_point(schedule.start, psi));
  const double dt = schedule.duration / samples;
  for (int k = 0; k < samples; ++k) {
    const double a = schedule.start + k * dt;
    const double b = (k + 1 == samples) ? schedule.end() : a + dt;
    const core::Schedule piece = schedule.slice(a, b);
    core::PropagateOptions opts;
    opts.step = std::min(step, piece.duration);
    psi = core::propagate(piece, opts) * psi;
    out.push_back(bloch_point(b, psi));
  }
  return out;
}

double path_length(const std::vector<BlochPoint>& points) {
  double total = 0.0;
  const BlochPoint* prev = nullptr;
  for (const auto& p : points) {
    if (p.flagged) continue;
    if (prev != nullptr) {
      total += std::sqrt((p.x - prev->x) * (p.x - prev->x) + (p.y - prev->y) * (p.y - prev->y) +
                         (p.z - prev->z) * (p.z - prev->z));
    }
    prev = &p;
  }
  return total;
}

}  // namespace nhqc::delta
