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

#include <array>
#include <functional>
#include <vector>

namespace nhqc::delta {

using core::Operator;
using core::StateVector;

using PhaseRamp = std::function<double(double)>;

/// Wraps an angle to (-pi, pi].
double wrap_phase(double phi);

/// phi1(t) = eta t
PhaseRamp linear_ramp(double eta);

/// Square-pulse parameters of the rotating-frame Delta system.
///
/// The five derived quantities follow from (Omega, theta, Delta2):
///   Omega0 = Omega sin(theta/2),  Omega1 = Omega cos(theta/2),
///   Omega2 = -Delta2 sin(theta/2) cos(theta/2),
///   Delta0 = -Delta2 sin^2(theta/2),  Delta1 = -Delta2 cos^2(theta/2).
/// The drive phases are phi0(t) = phi + phi1(t), phi1(t), phi2 = phi.
class RotatingFrameParams {
 public:
  RotatingFrameParams(double omega, double theta, double phi, double delta2, PhaseRamp phase_ramp);

  double omega() const noexcept { return omega_; }
  double theta() const noexcept { return theta_; }
  double phi() const noexcept { return phi_; }
  double delta2() const noexcept { return delta2_; }

  double omega0() const;
  double omega1() const;
  double omega2() const;
  double delta0() const;
  double delta1() const;

  double phi0(double t) const { return phi_ + phi1(t); }
  double phi1(double t) const { return phase_ramp_(t); }
  double phi2() const noexcept { return phi_; }

 private:
  double omega_;
  double theta_;
  double phi_;
  double delta2_;
  PhaseRamp phase_ramp_;
};

/// Lab-frame drive configuration. Index n refers to level |n> for energies
/// and to the transition driven by amplitude n (0: 0-2, 1: 1-2, 2: 0-1).
struct LabFrameConfig {
  std::array<double, 3> level_energies{};
  std::array<double, 3> amplitudes{};
  std::array<double, 3> drive_frequencies{};
  std::array<PhaseRamp, 3> phases;

  /// Throws ValidationError unless upsilon0 = upsilon1 + upsilon2.
  void validate() const;

  /// Frame energies w'_n with w'_0 = 0, w'_1 = upsilon2, w'_2 = upsilon0.
  std::array<double, 3> frame_energies() const;

  /// Detunings Delta_n = 2 (w_n - w'_n).
  std::array<double, 3> detunings() const;

  /// Lab configuration whose rotating frame reproduces `params`, with the
  /// 1-2 and 0-1 carriers at upsilon1 and upsilon2.
  static LabFrameConfig from_rotating(const RotatingFrameParams& params, double upsilon1,
                                      double upsilon2);
};

struct DressedBasis {
  StateVector bright;
  StateVector dark;
  StateVector auxiliary;

  /// Columns (bright, dark, auxiliary).
  Operator matrix() const;
};

Operator lab_frame_hamiltonian(const LabFrameConfig& config, double t);

/// U0(t) = sum_n exp(-i w'_n t) |n><n|; rotating-frame states are U0^dag psi_lab.
Operator frame_unitary(const LabFrameConfig& config, double t);

Operator rotating_frame_hamiltonian(const RotatingFrameParams& params, double t);

DressedBasis dressed_basis(double theta, double phi);

/// 2x2 Hamiltonian on {|b>, |2>}:
///   -(Delta2/2)(|b><b| - |2><2|) + (Omega/2)(exp(-i phi1(t)) |b><2| + h.c.)
Operator effective_hamiltonian(const RotatingFrameParams& params, double t);

/// Embeds a {|b>, |2>} operator into {|b>, |d>, |2>} with a zero dark row and column.
Operator embed_effective(const Operator& h_eff);

/// Rotating-frame Hamiltonian expressed in the dressed basis {b, d, 2}.
Operator to_dressed_frame(const Operator& h_rot, const DressedBasis& basis);

struct TocResiduals {
  double l1;
  double l2;
};

/// l1 = (Tr(Hc^2) - Omega^2/2)/2 and l2 = Tr(Hc sigma_z) for a 2x2 control
/// Hamiltonian on {|b>, |2>}.
TocResiduals toc_constraint_residuals(const Operator& h_control, double omega);

/// Residuals of the control part of the rotating-frame Hamiltonian at t,
/// extracted in the dressed basis by removing -(Delta2/2) sigma_z.
TocResiduals toc_constraint_residuals(const RotatingFrameParams& params, double t);

core::Schedule rotating_schedule(const RotatingFrameParams& params, double duration);
core::Schedule effective_schedule(const RotatingFrameParams& params, double duration);
core::Schedule lab_schedule(const LabFrameConfig& config, double duration);

struct BlochPoint {
  double t;
  double x;
  double y;
  double z;
  double leakage;
  bool flagged;
};

/// Bloch coordinates of the renormalized {|0>, |1>} projection at
/// samples + 1 equally spaced times including both ends. Points whose
/// projection norm falls below 1e-6 are flagged and carry (0, 0, 0).
std::vector<BlochPoint> bloch_trajectory(const core::Schedule& schedule, const StateVector& initial,
                                         int samples);

/// Sum of chord lengths between consecutive unflagged points.
double path_length(const std::vector<BlochPoint>& points);

}  // namespace nhqc::delta
