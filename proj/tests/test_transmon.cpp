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


#include "nhqc/core/errors.hpp"
#include "nhqc/core/fidelity.hpp"
#include "nhqc/core/propagator.hpp"
#include "nhqc/delta/delta_system.hpp"
#include "nhqc/transmon/transmon_circuit.hpp"

#include <gtest/gtest.h>

#include <chrono>
#include <cmath>
#include <random>

using namespace nhqc;
using namespace nhqc::transmon;
using core::kI;
using core::kPi;
using core::Operator;

namespace {

// Independent oracle: alternating power series of J1.
double j1_series(double x, int terms) {
  double sum = 0.0;
  double term = x / 2.0;  // k = 0
  for (int k = 0; k < terms; ++k) {
    sum += term;
    term *= -(x / 2.0) * (x / 2.0) / ((k + 1.0) * (k + 2.0));
  }
  return sum;
}

double max_abs(const Operator& m) { return m.cwiseAbs().maxCoeff(); }

const GateSpec kRx = GateSpec::rx(kPi / 2.0);

double lab_level(const TransmonParams& p, int n) {
  return n == 0 ? 0.0 : (n == 1 ? p.omega_q : 2.0 * p.omega_q - p.alpha);
}

}  // namespace

TEST(Bessel, MatchesSeriesOracle) {
  EXPECT_EQ(bessel_j1(0.0), 0.0);
  EXPECT_NEAR(bessel_j1(1.0), 0.4400505857, 1e-10);
  EXPECT_NEAR(bessel_j1(1.0), j1_series(1.0, 25), 1e-12);
  for (double x = -10.0; x <= 10.0; x += 0.25) {
    EXPECT_NEAR(bessel_j1(x), j1_series(x, 40), 1e-10) << x;
    EXPECT_LT(std::abs(j1_series(x, 25) - j1_series(x, 40)), 1e-12) << x;
    EXPECT_DOUBLE_EQ(bessel_j1(-x), -bessel_j1(x));
  }
}

TEST(Bessel, MonotoneBranchAndPeak) {
  double prev = -1.0;
  for (double x = 0.0; x < kJ1PeakArgument; x += 0.01) {
    const double v = bessel_j1(x);
    EXPECT_GT(v, prev);
    prev = v;
  }
  EXPECT_NEAR(bessel_j1(kJ1PeakArgument), kJ1Peak, 1e-12);
  EXPECT_THROW(bessel_j1(10.5), DomainError);
}

TEST(Bessel, InverseRoundTrip) {
  for (double v : {0.0, 0.1, 0.25, 0.44, 0.58}) EXPECT_NEAR(bessel_j1(inverse_bessel_j1(v)), v, 1e-12);
  EXPECT_THROW(inverse_bessel_j1(0.59), CapabilityError);
}

TEST(PhysicalHamiltonian, DiagonalWithoutCouplingsOrDrives) {
  LatticeConfig cfg = LatticeConfig::default_lattice();
  cfg.g1a = cfg.ga2 = cfg.g12 = 0.0;
  const Operator h = physical_hamiltonian_single_unit(cfg, UnitDrives{}, 3.0);
  EXPECT_LT(max_abs(h - Operator(h.diagonal().asDiagonal())), 1e-15);
  EXPECT_NEAR(h(unit_index(2, 1, 0), unit_index(2, 1, 0)).real(),
              2.0 * cfg.t1.omega_q - cfg.t1.alpha + cfg.ta.omega_q, 1e-12);
}

TEST(PhysicalHamiltonian, CouplingElements) {
  const LatticeConfig cfg = LatticeConfig::default_lattice();
  const UnitDrives drives = map_gate_to_drives(kRx, -cfg.omega / 2.0, cfg.omega, cfg).drives();
  for (double t : {0.0, 7.3, 101.0}) {
    const Operator h = physical_hamiltonian_single_unit(cfg, drives, t);
    EXPECT_NEAR(std::abs(h(unit_index(0, 1, 0), unit_index(1, 0, 0)) - cfg.g1a), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(h(unit_index(0, 0, 0), unit_index(1, 1, 0)) - cfg.g1a), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(h(unit_index(0, 1, 0), unit_index(0, 2, 1)) - std::sqrt(2.0) * cfg.ga2), 0.0, 1e-15);
  }
  LatticeConfig bad = cfg;
  bad.g12 = std::nan("");
  EXPECT_THROW(physical_hamiltonian_single_unit(bad, drives, 0.0), ValidationError);
}

TEST(PhysicalHamiltonian, HermitianAtRandomTimes) {
  const LatticeConfig cfg = LatticeConfig::default_lattice();
  const DriveMapping m = map_gate_to_drives(kRx, -cfg.omega / 2.0, cfg.omega, cfg);
  const auto sol = synthesis::solve_two_qubit_parameters(kPi, std::sqrt(2.0) * bessel_j1(cfg.beta3) * cfg.g23, 0.0);
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> time(0.0, m.tau);
  for (int i = 0; i < 200; ++i) {
    const double t = time(rng);
    for (const Operator& h : {physical_hamiltonian_single_unit(cfg, m.drives(), t), unit_frame_hamiltonian(cfg, m, t),
                              pair_frame_hamiltonian(cfg, sol, 1.0, t)}) {
      EXPECT_LT(max_abs(h - h.adjoint()), 1e-12 * std::max(1.0, max_abs(h)));
    }
  }
}

TEST(Mapping, FrameDetuningsAtHalfRatio) {
  const LatticeConfig cfg = LatticeConfig::default_lattice();
  const double w = cfg.omega;
  const DriveMapping m = map_gate_to_drives(kRx, -w / 2.0, w, cfg);
  EXPECT_NEAR(m.frame_detunings[0], w / 8.0, 1e-15);
  EXPECT_NEAR(m.frame_detunings[1], -w / 4.0, 1e-15);
  EXPECT_NEAR(m.frame_detunings[2], w / 8.0, 1e-15);
  EXPECT_NEAR(cfg.g1a * bessel_j1(m.beta1), w * std::sin(kPi / 4.0) / 2.0, 1e-12);
  EXPECT_NEAR(cfg.ga2 * bessel_j1(m.beta2), w * std::cos(kPi / 4.0) / 2.0, 1e-12);
  EXPECT_TRUE(m.g12_within_tolerance);
}

TEST(Mapping, PoleAndZeroDetuningCases) {
  const LatticeConfig cfg = LatticeConfig::default_lattice();
  const DriveMapping rz = map_gate_to_drives(GateSpec::rz(kPi / 2.0), -cfg.omega / 2.0, cfg.omega, cfg);
  EXPECT_EQ(rz.beta2, 0.0);
  EXPECT_EQ(rz.g12_required, 0.0);
  const DriveMapping lambda = map_gate_to_drives(kRx, 0.0, cfg.omega, cfg);
  for (double d : lambda.frame_detunings) EXPECT_EQ(d, 0.0);
  EXPECT_EQ(lambda.g12_required, 0.0);
}

TEST(Mapping, UnattainableCouplingIsCapabilityError) {
  const LatticeConfig cfg = LatticeConfig::default_lattice();
  EXPECT_THROW(map_gate_to_drives(kRx, 0.0, 10.0 * cfg.omega, cfg), CapabilityError);
}

TEST(Mapping, ConfiguredG12ResidualReported) {
  LatticeConfig cfg = LatticeConfig::default_lattice();
  cfg.g12 = ghz(0.003);
  const DriveMapping m = map_gate_to_drives(kRx, -cfg.omega / 2.0, cfg.omega, cfg);
  EXPECT_FALSE(m.g12_within_tolerance);
  EXPECT_GT(m.g12_residual, kG12Tolerance);
}

TEST(EffectiveModel, VanishesWithoutModulation) {
  const LatticeConfig cfg = LatticeConfig::default_lattice();
  DriveMapping m = map_gate_to_drives(kRx, -cfg.omega / 2.0, cfg.omega, cfg);
  m.beta1 = m.beta2 = 0.0;
  const Operator h = effective_logical_hamiltonian(cfg, m, 4.0);
  EXPECT_LT(max_abs(h - Operator(h.diagonal().asDiagonal())), 1e-15);
}

TEST(EffectiveModel, EqualsRotatingFrameHamiltonian) {
  const LatticeConfig cfg = LatticeConfig::default_lattice();
  for (double ratio : {-0.5, 0.3}) {
    const double d2 = ratio * cfg.omega;
    const DriveMapping m = map_gate_to_drives(kRx, d2, cfg.omega, cfg);
    const auto params = synthesis::make_pulse(synthesis::Scheme::Ours, kRx, d2, cfg.omega).rotating_params();
    for (double t : {0.0, 0.3 * m.tau, m.tau}) {
      const Operator a = to_delta_ordering(effective_logical_hamiltonian(cfg, m, t));
      const Operator b = delta::rotating_frame_hamiltonian(params, t);
      EXPECT_LT(max_abs(a - b), 1e-12) << ratio << " " << t;
    }
  }
}

TEST(FrameHamiltonian, MatchesNumericalFrameTransform) {
  LatticeConfig cfg = LatticeConfig::default_lattice();
  const DriveMapping m = map_gate_to_drives(kRx, -cfg.omega / 2.0, cfg.omega, cfg);
  cfg.g12 = m.g12_required;
  const UnitDrives drives = m.drives();
  const auto& d = m.frame_detunings;
  // U1 = diag(exp(-i theta)); frame H = U1^dag H U1 - theta'.
  auto theta = [&](double t) {
    Eigen::VectorXd th(27);
    for (std::size_t k = 0; k < 27; ++k) {
      const int n1 = static_cast<int>(k / 9);
      const int na = static_cast<int>((k / 3) % 3);
      const int n2 = static_cast<int>(k % 3);
      double e = lab_level(cfg.t1, n1) + lab_level(cfg.ta, na) + lab_level(cfg.t2, n2);
      e -= (n1 ? d[0] : 0.0) + (na ? d[1] : 0.0) + (n2 ? d[2] : 0.0);
      th(static_cast<Eigen::Index>(k)) =
          e * t - drives.t1.beta() * std::cos(drives.t1.nu * t + drives.t1.phase(t)) * n1 -
          drives.t2.beta() * std::cos(drives.t2.nu * t + drives.t2.phase(t)) * n2;
    }
    return th;
  };
  for (double t : {1.7, 55.0, 0.8 * m.tau}) {
    const Eigen::VectorXd th = theta(t);
    const double h = 1e-5;
    const Eigen::VectorXd rate = (theta(t + h) - theta(t - h)) / (2.0 * h);
    Eigen::VectorXcd u(27);
    for (Eigen::Index k = 0; k < 27; ++k) u(k) = std::exp(-kI * th(k));
    Operator expected = u.asDiagonal().toDenseMatrix().adjoint() * physical_hamiltonian_single_unit(cfg, drives, t) *
                        u.asDiagonal().toDenseMatrix();
    expected.diagonal() -= rate.cast<core::Complex>();
    EXPECT_LT(max_abs(expected - unit_frame_hamiltonian(cfg, m, t)), 1e-6) << t;
  }
}

TEST(LogicalGate, CouplingsOffGiveIdentity) {
  LatticeConfig cfg = LatticeConfig::default_lattice();
  DriveMapping m = map_gate_to_drives(GateSpec::rx(kPi), 0.0, cfg.omega, cfg);
  ASSERT_EQ(m.eta, 0.0);
  cfg.g1a = cfg.ga2 = cfg.g12 = 0.0;
  m.g12_required = 0.0;
  const LogicalGateResult r = simulate_mapping(cfg, m);
  EXPECT_LT(max_abs(r.unitary - core::identity(3)), 1e-12);
  EXPECT_NEAR(core::trace_fidelity(core::identity(2), r.gate), 1.0, 1e-12);
  EXPECT_NEAR(r.max_leakage, 0.0, 1e-12);
}

TEST(LogicalGate, RxHalfPiAtDefaultLattice) {
  const LatticeConfig cfg = LatticeConfig::default_lattice();
  const auto start = std::chrono::steady_clock::now();
  const LogicalGateResult r = simulate_logical_gate(kRx, -cfg.omega / 2.0, cfg.omega, cfg);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  EXPECT_GT(r.fidelity, 0.99);
  EXPECT_LT(seconds, 120.0);
  EXPECT_FALSE(r.flagged);
  ASSERT_GE(r.leakage.size(), 2U);
  EXPECT_NEAR(r.leakage.front().pop_single_excitation, 1.0, 1e-15);
  EXPECT_NEAR(r.leakage.back().t, r.mapping.tau, 1e-9);
  for (const auto& s : r.leakage) {
    EXPECT_LE(s.pop_single_excitation, 1.0 + 1e-9);
    EXPECT_GE(s.pop_double_excitation, -1e-15);
  }

  // Oracle: the effective 3-level model propagated directly.
  core::Schedule eff;
  eff.duration = r.mapping.tau;
  eff.hamiltonian_at = [&](double t) { return effective_logical_hamiltonian(cfg, r.mapping, t); };
  eff.recommended_step = r.mapping.tau / 4000.0;
  const Operator ue = core::propagate(eff);
  EXPECT_GT(core::trace_fidelity(ue, r.unitary), 0.99);
}

TEST(LogicalGate, SeparationScalingImprovesFidelity) {
  const LatticeConfig base = LatticeConfig::default_lattice();
  const double f1 = simulate_logical_gate(kRx, -base.omega / 2.0, base.omega, base).fidelity;
  const double f2 = simulate_logical_gate(kRx, -base.omega / 2.0, base.omega, base.scaled_separations(2.0)).fidelity;
  EXPECT_GT(f2, f1);
}

TEST(PairGate, ControlledPhaseAtDefaultLattice) {
  const LatticeConfig cfg = LatticeConfig::default_lattice();
  const PairResult r = two_qubit_physical(cfg, kPi, 0.0);
  EXPECT_GT(r.fidelity, 0.99);
  EXPECT_GT(std::norm(r.unitary(0, 0)), 0.999);
  EXPECT_NEAR(r.nu3, cfg.t2.omega_q - cfg.t3.omega_q - cfg.t2.alpha, 1e-12);
}

TEST(PairGate, DetunedControlledPhase) {
  const LatticeConfig cfg = LatticeConfig::default_lattice();
  const double g = std::sqrt(2.0) * bessel_j1(cfg.beta3) * cfg.g23;
  const PairResult r = two_qubit_physical(cfg, kPi / 2.0, -g / 2.0);
  EXPECT_GT(r.fidelity, 0.99);
}

TEST(PairGate, PreconditionViolation) {
  const LatticeConfig cfg = LatticeConfig::default_lattice();
  EXPECT_THROW(two_qubit_physical(cfg, kPi, cfg.t2.alpha / 5.0), CapabilityError);
}

TEST(Encoding, BasisStatesAndRoundTrip) {
  const auto zero = encode_logical(physical_qubit_state(1.0, 0.0));
  EXPECT_NEAR(std::abs(zero(kZeroL)), 1.0, 1e-15);
  const double r = 1.0 / std::sqrt(2.0);
  const auto plus = encode_logical(physical_qubit_state(r, r));
  EXPECT_NEAR(std::abs(plus(kZeroL) - r), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(plus(kOneL) - r), 0.0, 1e-15);

  std::mt19937_64 rng(3);
  std::normal_distribution<double> n(0.0, 1.0);
  for (int i = 0; i < 50; ++i) {
    core::Complex a(n(rng), n(rng));
    core::Complex b(n(rng), n(rng));
    const double norm = std::sqrt(std::norm(a) + std::norm(b));
    a /= norm;
    b /= norm;
    const auto v = physical_qubit_state(a, b);
    const auto e = encode_logical(v);
    EXPECT_NEAR(std::abs(e(kZeroL) - a), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(e(kOneL) - b), 0.0, 1e-12);
    EXPECT_LT((decode_logical(e) - v).norm(), 1e-12);
  }
  auto bad = physical_qubit_state(1.0, 0.0);
  bad(unit_index(0, 1, 0)) = 0.1;
  EXPECT_THROW(encode_logical(bad), ValidationError);
}
