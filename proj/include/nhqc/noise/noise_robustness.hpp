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

#include "nhqc/core/density_matrix.hpp"
#include "nhqc/synthesis/gate_synthesis.hpp"

#include <array>
#include <optional>
#include <vector>

namespace nhqc::noise {

using core::Operator;
using synthesis::GateSpec;
using synthesis::Pulse;
using synthesis::Scheme;

/// Systematic errors in units of Omega: the detuning becomes Delta2 + delta Omega
/// and the coupling (1 + epsilon) Omega.
struct ErrorParams {
  double delta = 0.0;
  double epsilon = 0.0;
};

struct NoiseModel {
  double gamma_minus = 0.0;
  double gamma_z = 0.0;

  static NoiseModel uniform(double kappa) { return {kappa, kappa}; }
  void validate() const;
};

/// S- = |0><2| + |1><2|
Operator decay_operator();
/// Sz = 2|2><2| - |1><1| - |0><0|
Operator dephasing_operator();

Operator perturbed_effective_hamiltonian(const synthesis::DriveSolution& sol, const ErrorParams& err,
                                         double t);
Operator perturbed_effective_hamiltonian(const Pulse& pulse, const ErrorParams& err, double t);

core::Schedule perturbed_schedule(const Pulse& pulse, const ErrorParams& err);

struct RunOptions {
  std::size_t threads = 1;
  std::optional<double> step;
};

/// Trace fidelity of the computational gate produced by the perturbed pulse
/// against the ideal holonomic gate.
double perturbed_gate_fidelity(const Pulse& pulse, const ErrorParams& err,
                               const RunOptions& options = {});

struct SchemeSeries {
  Scheme scheme;
  double tau_over_tauc = 0.0;
  std::vector<double> fidelity;
};

/// Fidelities of the three schemes over a grid. Robustness grids index cells
/// as i * epsilon_axis.size() + j (i over delta); decoherence curves index by
/// kappa. Difference vectors hold F(ours) - F(baseline).
struct SweepResult {
  GateSpec spec;
  double delta2 = 0.0;
  std::vector<double> delta_axis;
  std::vector<double> epsilon_axis;
  std::vector<double> kappa_axis;
  std::vector<SchemeSeries> series;
  std::vector<double> diff_vs_single_loop;
  std::vector<double> diff_vs_toc;

  std::size_t cell_count() const;
  const SchemeSeries& of(Scheme scheme) const;
  double delta_at(std::size_t cell) const;
  double epsilon_at(std::size_t cell) const;
  double kappa_at(std::size_t cell) const;
};

/// Evenly spaced points on [lo, hi] (n >= 2), or {lo} for n = 1.
std::vector<double> linspace(double lo, double hi, std::size_t n);

SweepResult robustness_grid(const GateSpec& spec, double delta2, const std::vector<double>& delta_axis,
                            const std::vector<double>& epsilon_axis, const RunOptions& options = {});

struct StateRun {
  double tau = 0.0;
  std::vector<double> times;
  std::vector<std::array<double, 3>> populations;
  /// <psi_ideal(t)|rho(t)|psi_ideal(t)> with psi_ideal the noiseless trajectory.
  std::vector<double> fidelity;
  double final_fidelity = 0.0;
};

/// Lindblad run of the rotating-frame pulse from a computational input state,
/// sampled at samples + 1 times. The final fidelity is taken against the
/// ideal gate applied to the input.
StateRun decoherence_state_run(const Pulse& pulse, const core::StateVector& input, const NoiseModel& noise,
                               int samples, const RunOptions& options = {});

/// F^G over the six cardinal states for each scheme and kappa.
SweepResult decoherence_gate_curve(const GateSpec& spec, double delta2, const std::vector<double>& kappa_axis,
                                   const RunOptions& options = {});

double cardinal_fidelity(const Pulse& pulse, const NoiseModel& noise, const RunOptions& options = {});

}  // namespace nhqc::noise
