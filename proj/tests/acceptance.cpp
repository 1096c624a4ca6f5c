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


// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "nhqc/core/fidelity.hpp"
#include "nhqc/core/lindblad.hpp"
#include "nhqc/core/propagator.hpp"
#include "nhqc/delta/delta_system.hpp"
#include "nhqc/noise/noise_robustness.hpp"
#include "nhqc/synthesis/gate_synthesis.hpp"
#include "nhqc/transmon/transmon_circuit.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace nhqc;
using core::kPi;
using core::Operator;
using synthesis::GateSpec;
using synthesis::Scheme;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

// Independent oracle: bisection on gamma - pi = pi (x - Delta2) / sqrt(Omega^2 + x^2), x = eta + Delta2.
double bisect_tau(double gamma, double delta2) {
  if (gamma == kPi) return 2.0 * kPi / std::hypot(1.0, delta2);
  auto f = [&](double x) { return kPi * (x - delta2) / std::hypot(1.0, x) - (gamma - kPi); };
  const double span = 1e4 * (1.0 + std::abs(delta2));
  double lo = gamma > kPi ? delta2 : delta2 - span;
  double hi = gamma > kPi ? delta2 + span : delta2;
  for (int i = 0; i < 300; ++i) {
    const double mid = 0.5 * (lo + hi);
    if ((f(mid) > 0.0) == (f(hi) > 0.0)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 2.0 * kPi / std::hypot(1.0, 0.5 * (lo + hi));
}

Outcome gate_time_law() {
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> g(1e-3, 2.0 * kPi - 1e-3);
  std::uniform_real_distribution<double> d(-2.0, 2.0);
  double worst = 0.0;
  int used = 0;
  while (used < 1000) {
    const double gamma = g(rng);
    const double delta2 = d(rng);
    const auto s = synthesis::solve_toc_parameters(gamma, delta2, 1.0);
    if (s.eta == 0.0) continue;
    worst = std::max(worst, std::abs(s.tau - synthesis::tau_closed_form(gamma, delta2, s.eta, 1.0)) / s.tau);
    ++used;
  }
  return {worst < 1e-9, "max relative error " + fmt(worst) + " over 1000 solutions"};
}

Outcome derived_accelerations() {
  struct Case {
    double gamma, delta2, expected;
  };
  const std::vector<Case> cases = {
      {kPi / 2.0, 0.0, std::sqrt(3.0) / 2.0}, {kPi / 2.0, -0.5, 0.6}, {kPi, -0.5, 2.0 / std::sqrt(5.0)}};
  double worst = 0.0;
  for (const auto& c : cases) {
    const double ratio = synthesis::solve_toc_parameters(c.gamma, c.delta2, 1.0).tau_over_tauc();
    const double oracle = bisect_tau(c.gamma, c.delta2) / (2.0 * kPi);
    worst = std::max({worst, std::abs(ratio - c.expected), std::abs(oracle - c.expected)});
  }
  return {worst < 1e-9, "max deviation from sqrt(3)/2, 0.6, 2/sqrt(5): " + fmt(worst)};
}

Outcome published_fidelities() {
  const auto noise = noise::NoiseModel::uniform(4e-4);
  core::StateVector zero(2);
  zero << 1.0, 0.0;
  core::StateVector plus(2);
  plus << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  const auto rx = noise::decoherence_state_run(synthesis::make_pulse(Scheme::Ours, GateSpec::rx(kPi / 2.0), -0.5, 1.0),
                                               zero, noise, 100);
  const auto rz = noise::decoherence_state_run(synthesis::make_pulse(Scheme::Ours, GateSpec::rz(kPi / 2.0), -0.5, 1.0),
                                               plus, noise, 100);
  const bool ok = std::abs(rx.final_fidelity - 0.9992) <= 1e-3 && std::abs(rz.final_fidelity - 0.9990) <= 1e-3;
  return {ok, "F(Rx) = " + fmt(rx.final_fidelity) + " (0.9992), F(Rz) = " + fmt(rz.final_fidelity) + " (0.9990)"};
}

Outcome scheme_ordering() {
  const auto kappas = noise::linspace(0.0, 1e-3, 11);
  const auto r = noise::decoherence_gate_curve(GateSpec::rx(kPi / 2.0), -0.5, kappas);
  const auto& ours = r.of(Scheme::Ours).fidelity;
  const auto& toc = r.of(Scheme::TocBaseline).fidelity;
  const auto& loop = r.of(Scheme::SingleLoop).fidelity;
  bool ok = true;
  for (std::size_t i = 1; i < kappas.size(); ++i) ok = ok && ours[i] > toc[i] && toc[i] > loop[i];
  return {ok, "at kappa = 1e-3: ours " + fmt(ours.back()) + ", toc " + fmt(toc.back()) + ", single loop " +
                  fmt(loop.back())};
}

struct GridStats {
  double mean_s = 0.0;
  double mean_t = 0.0;
  double min_s = 1.0;
};

GridStats stats(const noise::SweepResult& r) {
  GridStats s;
  for (std::size_t c = 0; c < r.cell_count(); ++c) {
    s.mean_s += r.diff_vs_single_loop[c];
    s.mean_t += r.diff_vs_toc[c];
    s.min_s = std::min(s.min_s, r.diff_vs_single_loop[c]);
  }
  s.mean_s /= static_cast<double>(r.cell_count());
  s.mean_t /= static_cast<double>(r.cell_count());
  return s;
}

double grid_gap(const noise::SweepResult& a, const noise::SweepResult& b) {
  double gap = 0.0;
  for (std::size_t c = 0; c < a.cell_count(); ++c) {
    gap = std::max({gap, std::abs(a.diff_vs_single_loop[c] - b.diff_vs_single_loop[c]),
                    std::abs(a.diff_vs_toc[c] - b.diff_vs_toc[c])});
  }
  return gap;
}

Outcome robustness_dominance() {
  const auto axis = noise::linspace(-0.1, 0.1, 41);
  const std::vector<double> zero = {0.0};
  const GateSpec rx = GateSpec::rx(kPi / 2.0);
  const GateSpec ry = GateSpec::ry(kPi / 2.0);
  const GateSpec rz = GateSpec::rz(kPi / 2.0);
  const auto joint = stats(noise::robustness_grid(rx, -0.5, axis, axis));

  const auto eps_x = noise::robustness_grid(rx, -0.5, zero, axis);
  const auto eps_y = noise::robustness_grid(ry, -0.5, zero, axis);
  const auto del_x = noise::robustness_grid(rx, -0.5, axis, zero);
  const auto del_y = noise::robustness_grid(ry, -0.5, axis, zero);
  const auto del_z = noise::robustness_grid(rz, -0.5, axis, zero);
  const double symmetry = std::max({grid_gap(eps_x, eps_y), grid_gap(del_x, del_y), grid_gap(del_x, del_z)});
  const double axis_min = std::min(stats(eps_x).min_s, stats(del_x).min_s);

  const bool ok = joint.mean_s > 0.0 && joint.mean_t > 0.0 && joint.min_s >= -1e-4 && symmetry <= 1e-10;
  return {ok, "joint 41x41: mean(F-Fs) = " + fmt(joint.mean_s) + ", mean(F-Ft) = " + fmt(joint.mean_t) +
                  ", min(F-Fs) = " + fmt(joint.min_s) + " (bound -1e-4); per-axis min(F-Fs) = " + fmt(axis_min) +
                  "; symmetry gap " + fmt(symmetry)};
}

Outcome propagator_equivalence() {
  std::mt19937 rng(77);
  std::uniform_real_distribution<double> g(0.05, 2.0 * kPi - 0.05);
  std::uniform_real_distribution<double> d(-2.0, 2.0);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst = 0.0;
  for (int k = 0; k < 20; ++k) {
    const GateSpec spec{g(rng), kPi * u(rng), 2.0 * kPi * u(rng)};
    const auto pulse = synthesis::make_pulse(Scheme::Ours, spec, d(rng), 1.0);
    const auto sol = synthesis::solve_toc_parameters(spec.gamma, pulse.delta2, 1.0);
    worst = std::max(worst, core::max_abs_diff(core::propagate(synthesis::effective_schedule(pulse)),
                                               synthesis::analytic_unitary(sol)));
  }
  return {worst < 1e-8, "max entry deviation " + fmt(worst) + " over 20 solutions"};
}

Outcome rwa_validation() {
  double worst = 1.0;
  std::string names;
  for (const auto& [name, spec] : std::vector<std::pair<std::string, GateSpec>>{
           {"Rx", GateSpec::rx(kPi / 2.0)}, {"Ry", GateSpec::ry(kPi / 2.0)}, {"Rz", GateSpec::rz(kPi / 2.0)}}) {
    const auto pulse = synthesis::make_pulse(Scheme::Ours, spec, -0.5, 1.0);
    const auto params = pulse.rotating_params();
    const auto lab = delta::LabFrameConfig::from_rotating(params, 200.0, 200.0);
    const Operator u = delta::frame_unitary(lab, pulse.tau).adjoint() *
                       core::propagate(delta::lab_schedule(lab, pulse.tau));
    const Operator u_rot = core::propagate(synthesis::rotating_schedule(pulse));
    const double f = core::trace_fidelity(u_rot, u);
    worst = std::min(worst, f);
    names += (names.empty() ? "" : ", ") + name + " " + fmt(f);
  }
  return {worst > 0.999, "lab vs rotating fidelity at upsilon = 200 Omega: " + names};
}

Outcome transmon_realization() {
  using clock = std::chrono::steady_clock;
  const auto cfg = transmon::LatticeConfig::default_lattice();
  auto t0 = clock::now();
  const auto logical = transmon::simulate_logical_gate(GateSpec::rx(kPi / 2.0), -cfg.omega / 2.0, cfg.omega, cfg);
  const double t_logical = std::chrono::duration<double>(clock::now() - t0).count();
  t0 = clock::now();
  const auto pair = transmon::two_qubit_physical(cfg, kPi, 0.0);
  const double t_pair = std::chrono::duration<double>(clock::now() - t0).count();
  const auto scaled = transmon::simulate_logical_gate(GateSpec::rx(kPi / 2.0), -cfg.omega / 2.0, cfg.omega,
                                                      cfg.scaled_separations(2.0));
  const bool ok = logical.fidelity > 0.99 && pair.fidelity > 0.99 && t_logical < 120.0 && t_pair < 120.0 &&
                  scaled.fidelity > logical.fidelity;
  return {ok, "27-dim Rx(pi/2) " + fmt(logical.fidelity) + " (" + fmt(t_logical) + " s), 2x separation " +
                  fmt(scaled.fidelity) + "; 9-dim CZ " + fmt(pair.fidelity) + " (" + fmt(t_pair) + " s)"};
}

Outcome invariant_suites() {
  std::mt19937 rng(9);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double unitarity = 0.0;
  double trace = 0.0;
  double dark = 0.0;
  double residual = 0.0;
  double round_trip = 0.0;
  for (int k = 0; k < 30; ++k) {
    const GateSpec spec{0.05 + (2.0 * kPi - 0.1) * u(rng), kPi * u(rng), 2.0 * kPi * u(rng)};
    const double delta2 = 4.0 * u(rng) - 2.0;
    for (Scheme s : {Scheme::Ours, Scheme::TocBaseline, Scheme::SingleLoop}) {
      const auto pulse = synthesis::make_pulse(s, spec, delta2, 1.0);
      const Operator v = core::propagate(synthesis::rotating_schedule(pulse));
      unitarity = std::max(unitarity, core::max_abs_diff(v.adjoint() * v, core::identity(3)));
    }
    const auto pulse = synthesis::make_pulse(Scheme::Ours, spec, delta2, 1.0);
    const auto params = pulse.rotating_params();
    const auto basis = delta::dressed_basis(spec.theta, spec.phi);
    for (double t : {0.0, 0.3 * pulse.tau, 0.9 * pulse.tau}) {
      const Operator h = delta::rotating_frame_hamiltonian(params, t);
      dark = std::max({dark, std::abs(basis.bright.dot(h * basis.dark)), std::abs(basis.auxiliary.dot(h * basis.dark))});
      const auto r = delta::toc_constraint_residuals(params, t);
      residual = std::max({residual, std::abs(r.l1), std::abs(r.l2)});
    }
    if (k < 5) {
      const double kappa = 1e-3 * u(rng);
      const auto rho = core::lindblad_evolve(synthesis::rotating_schedule(pulse),
                                             {noise::decay_operator(), noise::dephasing_operator()}, {kappa, kappa},
                                             core::DensityMatrix::pure(core::basis_state(3, 0)));
      trace = std::max(trace, std::abs(rho.matrix().trace() - 1.0));
    }
    const core::Complex a(u(rng) - 0.5, u(rng) - 0.5);
    const core::Complex b(u(rng) - 0.5, u(rng) - 0.5);
    const double n = std::sqrt(std::norm(a) + std::norm(b));
    const auto phys = transmon::physical_qubit_state(a / n, b / n);
    round_trip = std::max(round_trip, (transmon::decode_logical(transmon::encode_logical(phys)) - phys).norm());
  }
  const bool ok = unitarity < 1e-10 && trace < 1e-8 && dark < 1e-12 && residual < 1e-12 && round_trip < 1e-12;
  return {ok, "unitarity " + fmt(unitarity) + ", trace " + fmt(trace) + ", dark coupling " + fmt(dark) +
                  ", TOC residuals " + fmt(residual) + ", DFS round trip " + fmt(round_trip)};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double limit_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"gate-time law", 5.0, gate_time_law},
      {"derived accelerations", 0.0, derived_accelerations},
      {"published fidelities", 30.0, published_fidelities},
      {"scheme ordering under decoherence", 300.0, scheme_ordering},
      {"robustness dominance", 0.0, robustness_dominance},
      {"analytic/numeric propagator equivalence", 0.0, propagator_equivalence},
      {"rotating-wave frame validation", 0.0, rwa_validation},
      {"transmon realization", 0.0, transmon_realization},
      {"invariant suites", 60.0, invariant_suites},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& c = criteria[i];
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0.0 && seconds >= c.limit_seconds) {
      o.pass = false;
      o.detail += "; exceeded " + fmt(c.limit_seconds) + " s";
    }
    if (!o.pass) ++failures;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << " (" << c.name << "): " << o.detail << " ["
              << fmt(seconds) << " s]" << std::endl;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size()
            << " criteria passed" << std::endl;
  return failures == 0 ? 0 : 1;
}
