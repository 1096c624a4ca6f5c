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


#include "nhqc/transmon/transmon_circuit.hpp"

#include "nhqc/core/errors.hpp"
#include "nhqc/core/fidelity.hpp"
#include "nhqc/core/propagator.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace nhqc::transmon {

using core::kI;
using core::kPi;

double bessel_j1(double x) {
  if (!(std::abs(x) <= 10.0)) throw DomainError("bessel_j1 is defined here for |x| <= 10");
  return x < 0.0 ? -std::cyl_bessel_j(1.0, -x) : std::cyl_bessel_j(1.0, x);
}

double inverse_bessel_j1(double value) {
  if (!(value >= 0.0)) throw ValidationError("inverse_bessel_j1 expects a non-negative value");
  if (value > kJ1Peak) {
    std::ostringstream os;
    os << "required J1 value " << value << " exceeds the J1 peak " << kJ1Peak;
    throw CapabilityError(os.str());
  }
  double lo = 0.0;
  double hi = kJ1PeakArgument;
  for (int i = 0; i < 200 && hi - lo > 1e-15; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (bessel_j1(mid) < value) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

void TransmonParams::validate() const {
  if (!(omega_q > 0.0) || !std::isfinite(omega_q)) throw ValidationError("transmon frequency must be positive");
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw ValidationError("anharmonicity must be positive");
}

double ParametricDrive::detuning(double t) const { return epsilon * std::sin(nu * t + phase(t)); }

void LatticeConfig::validate() const {
  for (const TransmonParams* p : {&t1, &ta, &t2, &t3}) p->validate();
  for (double g : {g1a, ga2, g12, g23}) {
    if (!std::isfinite(g)) throw ValidationError("coupling strengths must be finite");
  }
  if (!(omega > 0.0)) throw ValidationError("drive scale Omega must be positive");
  if (!(beta3 >= 0.0 && beta3 < kJ1PeakArgument)) {
    throw ValidationError("beta3 must lie on the monotone J1 branch [0, 1.8412)");
  }
}

LatticeConfig LatticeConfig::default_lattice() {
  LatticeConfig c;
  c.t1 = {ghz(5.2), ghz(0.25)};
  c.ta = {ghz(6.0), ghz(0.25)};
  c.t2 = {ghz(4.6), ghz(0.25)};
  c.t3 = {ghz(3.35), ghz(0.25)};
  c.g1a = ghz(0.015);
  c.ga2 = ghz(0.015);
  c.g12 = ghz(0.015);
  c.g23 = ghz(0.015);
  c.omega = ghz(0.015);
  c.beta3 = 0.4;
  return c;
}

LatticeConfig LatticeConfig::scaled_separations(double factor) const {
  if (!(factor > 0.0)) throw ValidationError("scale factor must be positive");
  LatticeConfig c = *this;
  const double mean = (t1.omega_q + ta.omega_q + t2.omega_q) / 3.0;
  for (TransmonParams* p : {&c.t1, &c.ta, &c.t2, &c.t3}) {
    p->omega_q = mean + (p->omega_q - mean) * factor;
    p->alpha *= factor;
  }
  return c;
}

Operator lowering() {
  Operator s = Operator::Zero(3, 3);
  s(0, 1) = 1.0;
  s(1, 2) = std::sqrt(2.0);
  return s;
}

namespace {

Operator kron(const Operator& a, const Operator& b) {
  Operator out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Operator kron3(const Operator& a, const Operator& b, const Operator& c) { return kron(kron(a, b), c); }

double level_energy(const TransmonParams& p, int n, double shift) {
  if (n == 0) return 0.0;
  if (n == 1) return p.omega_q - shift;
  return 2.0 * p.omega_q - p.alpha - shift;
}

std::array<int, 3> unit_levels(std::size_t m) {
  return {static_cast<int>(m / 9), static_cast<int>((m / 3) % 3), static_cast<int>(m % 3)};
}

std::array<int, 2> pair_levels(std::size_t m) { return {static_cast<int>(m / 3), static_cast<int>(m % 3)}; }

Operator unit_coupling(double g1a, double ga2, double g12) {
  const Operator x = lowering() + lowering().adjoint();
  const Operator id = core::identity(3);
  return g1a * kron3(x, x, id) + ga2 * kron3(id, x, x) + g12 * kron3(x, id, x);
}

// Largest frame frequency among coupled pairs, used to size the step.
double fastest_frequency(const Operator& coupling, const Eigen::VectorXd& lin) {
  double w = 0.0;
  for (Eigen::Index m = 0; m < coupling.rows(); ++m)
    for (Eigen::Index n = 0; n < coupling.cols(); ++n)
      if (coupling(m, n) != 0.0) w = std::max(w, std::abs(lin(m) - lin(n)));
  return w;
}

double transmon_step(double tau, double w_max) {
  double step = tau / 2000.0;
  if (w_max > 0.0) step = std::min(step, 0.1 / w_max);
  return step;
}

// Precomputed pieces of the single-unit frame Hamiltonian.
struct UnitModel {
  Operator coupling;
  Eigen::VectorXd lin;
  Eigen::VectorXd static_diag;
  Eigen::VectorXd n1;
  Eigen::VectorXd n2;
  UnitDrives drives;

  UnitModel(const LatticeConfig& cfg, const DriveMapping& mapping) : drives(mapping.drives()) {
    coupling = unit_coupling(cfg.g1a, cfg.ga2, mapping.g12_required);
    lin.resize(27);
    static_diag.resize(27);
    n1.resize(27);
    n2.resize(27);
    const auto& d = mapping.frame_detunings;
    for (std::size_t m = 0; m < 27; ++m) {
      const auto n = unit_levels(m);
      const auto i = static_cast<Eigen::Index>(m);
      lin(i) = level_energy(cfg.t1, n[0], d[0]) + level_energy(cfg.ta, n[1], d[1]) +
               level_energy(cfg.t2, n[2], d[2]);
      static_diag(i) = (n[0] > 0 ? d[0] : 0.0) + (n[1] > 0 ? d[1] : 0.0) + (n[2] > 0 ? d[2] : 0.0);
      n1(i) = n[0];
      n2(i) = n[2];
    }
  }

  Operator at(double t) const {
    const ParametricDrive& a = drives.t1;
    const ParametricDrive& b = drives.t2;
    const double arg1 = a.nu * t + a.phase(t);
    const double arg2 = b.nu * t + b.phase(t);
    const double b1 = a.beta();
    const double b2 = b.beta();
    const Eigen::VectorXd theta = lin * t - b1 * std::cos(arg1) * n1 - b2 * std::cos(arg2) * n2;
    Eigen::VectorXcd ph(27);
    for (Eigen::Index m = 0; m < 27; ++m) ph(m) = std::exp(kI * theta(m));
    Operator h = coupling.cwiseProduct(ph * ph.adjoint());
    const Eigen::VectorXd diag = static_diag - b1 * a.phase_rate * std::sin(arg1) * n1 -
                                 b2 * b.phase_rate * std::sin(arg2) * n2;
    h.diagonal() += diag.cast<core::Complex>();
    return h;
  }

  double max_frequency() const {
    double w = fastest_frequency(coupling, lin);
    for (const ParametricDrive* p : {&drives.t1, &drives.t2}) {
      w = std::max(w, std::abs(p->nu) * (1.0 + p->beta()) + std::abs(p->phase_rate));
    }
    return w;
  }
};

struct PairModel {
  Operator coupling;
  Eigen::VectorXd lin;
  Eigen::VectorXd n3;
  ParametricDrive drive;

  PairModel(const LatticeConfig& cfg, const synthesis::TwoQubitDriveSolution& sol, double nu3) {
    const Operator x = lowering() + lowering().adjoint();
    coupling = cfg.g23 * kron(x, x);
    lin.resize(9);
    n3.resize(9);
    for (std::size_t m = 0; m < 9; ++m) {
      const auto n = pair_levels(m);
      const auto i = static_cast<Eigen::Index>(m);
      lin(i) = level_energy(cfg.t2, n[0], 0.0) + level_energy(cfg.t3, n[1], 0.0);
      n3(i) = n[1];
    }
    drive.nu = nu3;
    drive.epsilon = cfg.beta3 * nu3;
    drive.phase0 = kPi / 2.0;
    drive.phase_rate = sol.eta;
  }

  Operator at(double t) const {
    const double arg = drive.nu * t + drive.phase(t);
    const double beta = drive.beta();
    const Eigen::VectorXd theta = lin * t - beta * std::cos(arg) * n3;
    Eigen::VectorXcd ph(9);
    for (Eigen::Index m = 0; m < 9; ++m) ph(m) = std::exp(kI * theta(m));
    Operator h = coupling.cwiseProduct(ph * ph.adjoint());
    h.diagonal() += (-beta * drive.phase_rate * std::sin(arg) * n3).cast<core::Complex>();
    return h;
  }
};

}  // namespace

Operator physical_hamiltonian_single_unit(const LatticeConfig& cfg, const UnitDrives& drives, double t) {
  for (double g : {cfg.g1a, cfg.ga2, cfg.g12}) {
    if (!std::isfinite(g)) throw ValidationError("single unit requires the couplings g1a, ga2 and g12");
  }
  for (const TransmonParams* p : {&cfg.t1, &cfg.ta, &cfg.t2}) p->validate();
  TransmonParams q1 = cfg.t1;
  TransmonParams q2 = cfg.t2;
  q1.omega_q += drives.t1.detuning(t);
  q2.omega_q += drives.t2.detuning(t);
  Operator h = unit_coupling(cfg.g1a, cfg.ga2, cfg.g12);
  for (std::size_t m = 0; m < 27; ++m) {
    const auto n = unit_levels(m);
    // The drive shifts omega_q, so |2> moves by twice the detuning.
    const double e = level_energy(q1, n[0], 0.0) + level_energy(cfg.ta, n[1], 0.0) + level_energy(q2, n[2], 0.0);
    h(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m)) += e;
  }
  return h;
}

double DriveMapping::phi_prime1(double t) const { return spec.phi + eta * t; }
double DriveMapping::phi_prime2(double t) const { return -eta * t; }

UnitDrives DriveMapping::drives() const {
  UnitDrives d;
  d.t1.nu = nu1;
  d.t1.epsilon = beta1 * nu1;
  d.t1.phase0 = spec.phi - kPi / 2.0;
  d.t1.phase_rate = eta;
  d.t2.nu = nu2;
  d.t2.epsilon = beta2 * nu2;
  d.t2.phase0 = kPi / 2.0;
  d.t2.phase_rate = -eta;
  return d;
}

DriveMapping map_gate_to_drives(const GateSpec& spec, double delta2, double omega, const LatticeConfig& cfg) {
  spec.validate();
  cfg.validate();
  const synthesis::DriveSolution sol = synthesis::solve_toc_parameters(spec.gamma, delta2, omega);
  // Rounding at the poles would leave a spurious 1e-17 leg.
  auto snap = [](double v) { return std::abs(v) < 1e-14 ? 0.0 : v; };
  const double s = snap(std::sin(spec.theta / 2.0));
  const double c = snap(std::cos(spec.theta / 2.0));

  DriveMapping m;
  m.spec = spec;
  m.omega = omega;
  m.delta2 = delta2;
  m.eta = sol.eta;
  m.tau = sol.tau;
  m.frame_detunings = {-0.5 * delta2 * s * s, 0.5 * delta2, -0.5 * delta2 * c * c};

  const double need1 = 0.5 * omega * s;
  const double need2 = 0.5 * omega * c;
  auto solve_leg = [](double need, double g, const char* name) {
    if (need == 0.0) return 0.0;
    if (!(g > 0.0) || need / g > kJ1Peak) {
      std::ostringstream os;
      os << "unattainable coupling: " << name << " requires g J1(beta) = " << need
         << " but g * max J1 = " << std::max(0.0, g) * kJ1Peak;
      throw CapabilityError(os.str());
    }
    return inverse_bessel_j1(need / g);
  };
  m.beta1 = solve_leg(need1, cfg.g1a, "Omega sin(theta/2)/2 <= g1a max J1");
  m.beta2 = solve_leg(need2, cfg.ga2, "Omega cos(theta/2)/2 <= ga2 max J1");

  const double product = bessel_j1(m.beta1) * bessel_j1(m.beta2);
  const double target = -0.5 * delta2 * s * c;
  if (product > 0.0) {
    m.g12_required = target / product;
  } else {
    m.g12_required = 0.0;
  }
  m.g12_configured = cfg.g12;
  const double scale = std::max(std::abs(m.g12_required), std::abs(m.g12_configured));
  m.g12_residual = scale > 0.0 ? std::abs(m.g12_configured - m.g12_required) / scale : 0.0;
  m.g12_within_tolerance = m.g12_residual <= kG12Tolerance;

  const auto& d = m.frame_detunings;
  m.nu1 = (cfg.t1.omega_q - cfg.ta.omega_q) - d[0] + d[1];
  m.nu2 = (cfg.ta.omega_q - cfg.t2.omega_q) - d[1] + d[2];
  return m;
}

Operator effective_logical_hamiltonian(const LatticeConfig& cfg, const DriveMapping& mapping, double t) {
  const double j1 = bessel_j1(mapping.beta1);
  const double j2 = bessel_j1(mapping.beta2);
  const double p1 = mapping.phi_prime1(t);
  const double p2 = mapping.phi_prime2(t);
  Operator h = Operator::Zero(3, 3);
  h(0, 0) = mapping.frame_detunings[0];
  h(1, 1) = mapping.frame_detunings[1];
  h(2, 2) = mapping.frame_detunings[2];
  h(0, 1) = cfg.g1a * j1 * std::exp(-kI * p1);
  h(2, 1) = cfg.ga2 * j2 * std::exp(kI * p2);
  h(0, 2) = mapping.g12_required * j1 * j2 * std::exp(-kI * (p1 + p2));
  h(1, 0) = std::conj(h(0, 1));
  h(1, 2) = std::conj(h(2, 1));
  h(2, 0) = std::conj(h(0, 2));
  return h;
}

Operator to_delta_ordering(const Operator& logical) {
  if (logical.rows() != 3 || logical.cols() != 3) throw ValidationError("expected a 3x3 logical operator");
  const std::array<int, 3> order = {0, 2, 1};
  Operator out(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out(i, j) = logical(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]);
  return out;
}

Operator unit_frame_hamiltonian(const LatticeConfig& cfg, const DriveMapping& mapping, double t) {
  return UnitModel(cfg, mapping).at(t);
}

core::Schedule unit_frame_schedule(const LatticeConfig& cfg, const DriveMapping& mapping) {
  auto model = std::make_shared<const UnitModel>(cfg, mapping);
  core::Schedule s;
  s.duration = mapping.tau;
  s.hamiltonian_at = [model](double t) { return model->at(t); };
  s.recommended_step = transmon_step(mapping.tau, model->max_frequency());
  return s;
}

namespace {

LeakageSample leakage_sample(double t, const Operator& u) {
  LeakageSample s{t, 0.0, 0.0, 0.0};
  for (std::size_t m = 0; m < 27; ++m) {
    const auto n = unit_levels(m);
    const double p = 0.5 * (std::norm(u(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(kZeroL))) +
                            std::norm(u(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(kOneL))));
    const int total = n[0] + n[1] + n[2];
    if (total == 1) s.pop_single_excitation += p;
    if (total == 2) s.pop_double_excitation += p;
    if (n[0] == 2 || n[1] == 2 || n[2] == 2) s.pop_level2 += p;
  }
  return s;
}

}  // namespace

LogicalGateResult simulate_mapping(const LatticeConfig& cfg, const DriveMapping& mapping,
                                   const SimulationOptions& options) {
  const core::Schedule schedule = unit_frame_schedule(cfg, mapping);
  const double step = core::resolve_step(schedule, options.step);
  const long steps = std::max(1L, static_cast<long>(std::ceil(schedule.duration / step - 1e-9)));
  const long stride = std::max(1L, steps / std::max(1, options.leakage_samples));

  LogicalGateResult r;
  r.mapping = mapping;
  r.leakage.push_back(leakage_sample(0.0, core::identity(27)));
  long count = 0;
  core::PropagateOptions popts;
  popts.step = step;
  popts.observer = [&](double t, const Operator& u) {
    ++count;
    if (count % stride == 0 || count == steps) r.leakage.push_back(leakage_sample(t, u));
  };
  const Operator u = core::propagate(schedule, popts);

  const std::array<std::size_t, 3> idx = {kZeroL, kAuxE, kOneL};
  r.unitary.resize(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      r.unitary(i, j) = u(static_cast<Eigen::Index>(idx[static_cast<std::size_t>(i)]),
                          static_cast<Eigen::Index>(idx[static_cast<std::size_t>(j)]));
  r.gate.resize(2, 2);
  r.gate << r.unitary(0, 0), r.unitary(0, 2), r.unitary(2, 0), r.unitary(2, 2);
  r.fidelity = core::trace_fidelity(synthesis::holonomic_gate(mapping.spec), r.gate);
  for (const auto& s : r.leakage) r.max_leakage = std::max(r.max_leakage, 1.0 - s.pop_single_excitation);
  r.flagged = r.max_leakage > kLeakageFlag;
  return r;
}

LogicalGateResult simulate_logical_gate(const GateSpec& spec, double delta2, double omega,
                                        const LatticeConfig& cfg, const SimulationOptions& options) {
  return simulate_mapping(cfg, map_gate_to_drives(spec, delta2, omega, cfg), options);
}

Operator pair_frame_hamiltonian(const LatticeConfig& cfg, const synthesis::TwoQubitDriveSolution& sol,
                                double nu3, double t) {
  return PairModel(cfg, sol, nu3).at(t);
}

PairResult two_qubit_physical(const LatticeConfig& cfg, double gamma_prime, double delta3,
                              const SimulationOptions& options) {
  cfg.validate();
  const double d23 = cfg.t2.omega_q - cfg.t3.omega_q;
  const double limit = std::min(std::abs(d23), cfg.t2.alpha) / 10.0;
  if (!(std::abs(delta3) < limit)) {
    std::ostringstream os;
    os << "two-qubit gate requires |Delta3'| < min(|Delta23|, alpha2)/10 = " << limit << " rad/ns, got "
       << std::abs(delta3);
    throw CapabilityError(os.str());
  }
  if (!(cfg.g23 > 0.0) || cfg.beta3 == 0.0) throw CapabilityError("two-qubit gate requires g23 > 0 and beta3 > 0");
  const double g = std::sqrt(2.0) * bessel_j1(cfg.beta3) * cfg.g23;
  PairResult r;
  r.solution = synthesis::solve_two_qubit_parameters(gamma_prime, g, delta3);
  r.nu3 = d23 - cfg.t2.alpha - delta3;

  auto model = std::make_shared<const PairModel>(cfg, r.solution, r.nu3);
  core::Schedule s;
  s.duration = r.solution.tau;
  s.hamiltonian_at = [model](double t) { return model->at(t); };
  const double w = std::max(fastest_frequency(model->coupling, model->lin),
                            std::abs(r.nu3) * (1.0 + cfg.beta3) + std::abs(r.solution.eta));
  s.recommended_step = transmon_step(s.duration, w);
  core::PropagateOptions popts;
  popts.step = options.step;
  Operator u = core::propagate(s, popts);

  const double tau = r.solution.tau;
  u.row(static_cast<Eigen::Index>(pair_index(1, 1))) *= std::exp(kI * delta3 * tau / 2.0);
  u.row(static_cast<Eigen::Index>(pair_index(2, 0))) *= std::exp(-kI * delta3 * tau / 2.0);

  r.unitary.resize(5, 5);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j)
      r.unitary(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          u(static_cast<Eigen::Index>(kPairLogical[i]), static_cast<Eigen::Index>(kPairLogical[j]));
  r.gate = r.unitary.topLeftCorner(4, 4);
  r.fidelity = core::trace_fidelity(synthesis::two_qubit_gate(gamma_prime), r.gate);
  return r;
}

namespace {

// NOT on T2 (swap |0>, |1>, keep |2>) followed by CNOT with control T1.
std::size_t encode_index(std::size_t m) {
  auto n = unit_levels(m);
  auto flip = [](int v) { return v == 2 ? 2 : 1 - v; };
  n[2] = flip(n[2]);
  if (n[0] == 1) n[2] = flip(n[2]);
  return unit_index(n[0], n[1], n[2]);
}

std::size_t decode_index(std::size_t m) {
  auto n = unit_levels(m);
  auto flip = [](int v) { return v == 2 ? 2 : 1 - v; };
  if (n[0] == 1) n[2] = flip(n[2]);
  n[2] = flip(n[2]);
  return unit_index(n[0], n[1], n[2]);
}

void require_support(const StateVector& v, std::initializer_list<std::size_t> allowed, const char* what) {
  if (v.size() != 27) throw ValidationError("expected a 27-dim single-unit state");
  double inside = 0.0;
  for (std::size_t k : allowed) inside += std::norm(v(static_cast<Eigen::Index>(k)));
  if (v.squaredNorm() - inside > 1e-12) throw ValidationError(what);
}

}  // namespace

StateVector encode_logical(const StateVector& physical) {
  require_support(physical, {unit_index(0, 0, 0), unit_index(1, 0, 0)},
                  "encode_logical: Ta and T2 must start in |0> and T1 in {|0>, |1>}");
  StateVector out = StateVector::Zero(27);
  for (std::size_t m = 0; m < 27; ++m) out(static_cast<Eigen::Index>(encode_index(m))) = physical(static_cast<Eigen::Index>(m));
  return out;
}

StateVector decode_logical(const StateVector& logical) {
  require_support(logical, {kZeroL, kOneL}, "decode_logical: state has population outside S1");
  StateVector out = StateVector::Zero(27);
  for (std::size_t m = 0; m < 27; ++m) out(static_cast<Eigen::Index>(decode_index(m))) = logical(static_cast<Eigen::Index>(m));
  return out;
}

StateVector physical_qubit_state(core::Complex a, core::Complex b) {
  StateVector v = StateVector::Zero(27);
  v(static_cast<Eigen::Index>(unit_index(1, 0, 0))) = a;
  v(static_cast<Eigen::Index>(unit_index(0, 0, 0))) = b;
  return v;
}

}  // namespace nhqc::transmon
