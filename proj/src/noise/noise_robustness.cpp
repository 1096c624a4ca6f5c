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


#include "nhqc/noise/noise_robustness.hpp"

#include "nhqc/core/errors.hpp"
#include "nhqc/core/fidelity.hpp"
#include "nhqc/core/lindblad.hpp"
#include "nhqc/core/parallel.hpp"
#include "nhqc/core/propagator.hpp"

#include <algorithm>
#include <cmath>

namespace nhqc::noise {

using core::kI;

void NoiseModel::validate() const {
  if (!(gamma_minus >= 0.0) || !(gamma_z >= 0.0)) throw ValidationError("decoherence rates must be >= 0");
}

Operator decay_operator() {
  Operator a = Operator::Zero(3, 3);
  a(0, 2) = 1.0;
  a(1, 2) = 1.0;
  return a;
}

Operator dephasing_operator() {
  Operator a = Operator::Zero(3, 3);
  a(0, 0) = -1.0;
  a(1, 1) = -1.0;
  a(2, 2) = 2.0;
  return a;
}

namespace {

Operator perturbed(double delta2, double omega, double phase, const ErrorParams& err) {
  const double d = delta2 + err.delta * omega;
  const core::Complex coupling = 0.5 * (1.0 + err.epsilon) * omega * std::exp(-kI * phase);
  Operator h(2, 2);
  h << -d / 2.0, coupling, std::conj(coupling), d / 2.0;
  return h;
}

std::vector<Pulse> scheme_pulses(const GateSpec& spec, double delta2) {
  return {synthesis::make_pulse(Scheme::Ours, spec, delta2, 1.0),
          synthesis::make_pulse(Scheme::TocBaseline, spec, delta2, 1.0),
          synthesis::make_pulse(Scheme::SingleLoop, spec, delta2, 1.0)};
}

void fill_differences(SweepResult& r) {
  const auto& ours = r.of(Scheme::Ours).fidelity;
  const auto& toc = r.of(Scheme::TocBaseline).fidelity;
  const auto& loop = r.of(Scheme::SingleLoop).fidelity;
  r.diff_vs_single_loop.resize(ours.size());
  r.diff_vs_toc.resize(ours.size());
  for (std::size_t i = 0; i < ours.size(); ++i) {
    r.diff_vs_single_loop[i] = ours[i] - loop[i];
    r.diff_vs_toc[i] = ours[i] - toc[i];
  }
}

core::DensityMatrix evolve(const core::DensityMatrix& rho0, const NoiseModel& noise,
                           const core::Schedule& schedule, const RunOptions& options) {
  core::LindbladOptions opts;
  opts.step = options.step;
  if (opts.step) opts.step = std::min(*opts.step, schedule.duration);
  return core::lindblad_evolve(schedule, {decay_operator(), dephasing_operator()},
                               {noise.gamma_minus, noise.gamma_z}, rho0, opts);
}

}  // namespace

Operator perturbed_effective_hamiltonian(const synthesis::DriveSolution& sol, const ErrorParams& err,
                                         double t) {
  return perturbed(sol.delta2, sol.omega, sol.eta * t, err);
}

Operator perturbed_effective_hamiltonian(const Pulse& pulse, const ErrorParams& err, double t) {
  return perturbed(pulse.delta2, pulse.omega, pulse.phase_ramp()(t), err);
}

core::Schedule perturbed_schedule(const Pulse& pulse, const ErrorParams& err) {
  core::Schedule s;
  s.duration = pulse.tau;
  const double delta2 = pulse.delta2;
  const double omega = pulse.omega;
  s.hamiltonian_at = [delta2, omega, err, ramp = pulse.phase_ramp()](double t) {
    return perturbed(delta2, omega, ramp(t), err);
  };
  const double scale = std::max(std::abs(1.0 + err.epsilon) * omega, std::abs(delta2 + err.delta * omega));
  s.recommended_step = core::default_step(pulse.tau, std::max(scale, omega));
  s.breakpoints = pulse.breakpoints();
  return s;
}

double perturbed_gate_fidelity(const Pulse& pulse, const ErrorParams& err, const RunOptions& options) {
  core::PropagateOptions opts;
  opts.step = options.step;
  const Operator u = core::propagate(perturbed_schedule(pulse, err), opts);
  const Operator gate =
      synthesis::lift_dressed_operator(u, pulse.spec.theta, pulse.spec.phi).topLeftCorner(2, 2);
  return core::trace_fidelity(synthesis::holonomic_gate(pulse.spec), gate);
}

std::size_t SweepResult::cell_count() const {
  if (!kappa_axis.empty()) return kappa_axis.size();
  return delta_axis.size() * epsilon_axis.size();
}

const SchemeSeries& SweepResult::of(Scheme scheme) const {
  for (const auto& s : series) {
    if (s.scheme == scheme) return s;
  }
  throw ValidationError("sweep has no series for scheme " + synthesis::to_string(scheme));
}

double SweepResult::delta_at(std::size_t cell) const {
  if (!kappa_axis.empty()) return 0.0;
  return delta_axis.at(cell / epsilon_axis.size());
}

double SweepResult::epsilon_at(std::size_t cell) const {
  if (!kappa_axis.empty()) return 0.0;
  return epsilon_axis.at(cell % epsilon_axis.size());
}

double SweepResult::kappa_at(std::size_t cell) const {
  if (kappa_axis.empty()) return 0.0;
  return kappa_axis.at(cell);
}

std::vector<double> linspace(double lo, double hi, std::size_t n) {
  if (n == 0) throw ValidationError("grid must have at least one point");
  if (!std::isfinite(lo) || !std::isfinite(hi)) throw ValidationError("grid bounds must be finite");
  if (n == 1) return {lo};
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  }
  return out;
}

SweepResult robustness_grid(const GateSpec& spec, double delta2, const std::vector<double>& delta_axis,
                            const std::vector<double>& epsilon_axis, const RunOptions& options) {
  spec.validate();
  if (delta_axis.empty() || epsilon_axis.empty()) throw ValidationError("robustness grid axes are empty");
  for (double v : delta_axis) {
    if (!std::isfinite(v)) throw ValidationError("delta grid must be finite");
  }
  for (double v : epsilon_axis) {
    if (!std::isfinite(v)) throw ValidationError("epsilon grid must be finite");
  }
  SweepResult r;
  r.spec = spec;
  r.delta2 = delta2;
  r.delta_axis = delta_axis;
  r.epsilon_axis = epsilon_axis;
  const std::vector<Pulse> pulses = scheme_pulses(spec, delta2);
  const std::size_t cells = r.cell_count();
  for (const Pulse& p : pulses) r.series.push_back({p.scheme, p.tau_over_tauc(), std::vector<double>(cells)});

  core::parallel_for(cells * pulses.size(), options.threads, [&](std::size_t idx) {
    const std::size_t s = idx / cells;
    const std::size_t cell = idx % cells;
    const ErrorParams err{r.delta_at(cell), r.epsilon_at(cell)};
    r.series[s].fidelity[cell] = perturbed_gate_fidelity(pulses[s], err, options);
  });
  fill_differences(r);
  return r;
}

StateRun decoherence_state_run(const Pulse& pulse, const core::StateVector& input, const NoiseModel& noise,
                               int samples, const RunOptions& options) {
  noise.validate();
  if (samples < 1) throw ValidationError("samples must be positive");
  if (input.size() != 2) throw ValidationError("input must be a computational-subspace state");
  const core::StateVector psi0 = core::embed(core::normalized(input), 3);
  const core::Schedule schedule = synthesis::rotating_schedule(pulse);
  const double step = core::resolve_step(schedule, options.step);

  StateRun run;
  run.tau = pulse.tau;
  core::DensityMatrix rho = core::DensityMatrix::pure(psi0);
  core::StateVector ideal = psi0;
  auto record = [&](double t) {
    run.times.push_back(t);
    run.populations.push_back({rho.population(0), rho.population(1), rho.population(2)});
    run.fidelity.push_back(core::state_fidelity(rho, ideal));
  };
  record(0.0);
  const double dt = pulse.tau / samples;
  for (int k = 0; k < samples; ++k) {
    const double a = k * dt;
    const double b = (k + 1 == samples) ? pulse.tau : a + dt;
    const core::Schedule piece = schedule.slice(a, b);
    RunOptions local = options;
    local.step = std::min(step, piece.duration);
    rho = evolve(rho, noise, piece, local);
    core::PropagateOptions popts;
    popts.step = local.step;
    ideal = core::propagate(piece, popts) * ideal;
    record(b);
  }
  const core::StateVector target = core::embed(synthesis::holonomic_gate(pulse.spec) * input.normalized(), 3);
  run.final_fidelity = core::state_fidelity(rho, target);
  return run;
}

double cardinal_fidelity(const Pulse& pulse, const NoiseModel& noise, const RunOptions& options) {
  noise.validate();
  const core::Schedule schedule = synthesis::rotating_schedule(pulse);
  return core::cardinal_gate_fidelity(synthesis::holonomic_gate(pulse.spec), [&](const core::StateVector& in) {
    return evolve(core::DensityMatrix::pure(core::embed(in, 3)), noise, schedule, options);
  });
}

SweepResult decoherence_gate_curve(const GateSpec& spec, double delta2, const std::vector<double>& kappa_axis,
                                   const RunOptions& options) {
  spec.validate();
  if (kappa_axis.empty()) throw ValidationError("kappa grid is empty");
  for (double k : kappa_axis) {
    if (!(k >= 0.0) || !std::isfinite(k)) throw ValidationError("kappa grid must be finite and >= 0");
  }
  SweepResult r;
  r.spec = spec;
  r.delta2 = delta2;
  r.kappa_axis = kappa_axis;
  const std::vector<Pulse> pulses = scheme_pulses(spec, delta2);
  const std::size_t cells = kappa_axis.size();
  for (const Pulse& p : pulses) r.series.push_back({p.scheme, p.tau_over_tauc(), std::vector<double>(cells)});
  core::parallel_for(cells * pulses.size(), options.threads, [&](std::size_t idx) {
    const std::size_t s = idx / cells;
    const std::size_t cell = idx % cells;
    r.series[s].fidelity[cell] = cardinal_fidelity(pulses[s], NoiseModel::uniform(kappa_axis[cell]), options);
  });
  fill_differences(r);
  return r;
}

}  // namespace nhqc::noise
