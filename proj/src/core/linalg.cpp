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


#include "nhqc/core/linalg.hpp"

#include "nhqc/core/errors.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <string>

namespace nhqc::core {

double max_abs(const Operator& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double max_abs_diff(const Operator& a, const Operator& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ValidationError("max_abs_diff: shape mismatch");
  }
  return max_abs(a - b);
}

double max_abs_diff_up_to_phase(const Operator& a, const Operator& b) {
  const Complex overlap = (a.adjoint() * b).trace();
  const Complex phase = std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : Complex{1.0, 0.0};
  return max_abs_diff(a * phase, b);
}

bool is_hermitian(const Operator& h, double tol) {
  if (h.rows() != h.cols()) return false;
  return max_abs(h - h.adjoint()) < tol;
}

bool is_unitary(const Operator& u, double tol) {
  if (u.rows() != u.cols()) return false;
  return max_abs(u.adjoint() * u - Operator::Identity(u.rows(), u.cols())) < tol;
}

namespace {

// exp(-iHt) for a 2x2 Hermitian matrix written as a0 I + r (n . sigma).
Operator exp_hermitian_2x2(const Operator& h, double t) {
  const double a0 = 0.5 * (h(0, 0).real() + h(1, 1).real());
  Operator traceless = h;
  traceless(0, 0) -= a0;
  traceless(1, 1) -= a0;
  const double z = traceless(0, 0).real();
  const double r = std::sqrt(z * z + std::norm(traceless(0, 1)));
  const double rt = r * t;
  // sin(rt)/r, continuous at r = 0
  const double sinc_t = std::abs(rt) < 1e-8 ? t * (1.0 - rt * rt / 6.0) : std::sin(rt) / r;
  Operator out = std::cos(rt) * Operator::Identity(2, 2) - kI * sinc_t * traceless;
  return out * std::exp(-kI * a0 * t);
}

}  // namespace

Operator matrix_exponential(const Operator& h, double t) {
  if (h.rows() != h.cols() || h.rows() == 0) {
    throw ValidationError("matrix_exponential: operator must be square and non-empty");
  }
  const double scale = std::max(1.0, max_abs(h));
  if (!is_hermitian(h, kHermitianTol * scale)) {
    throw ValidationError("matrix_exponential: generator is not Hermitian (max |H - H^dag| = " +
                          std::to_string(max_abs(h - h.adjoint())) + ")");
  }
  if (t == 0.0) return Operator::Identity(h.rows(), h.cols());
  if (h.rows() == 1) {
    Operator out(1, 1);
    out(0, 0) = std::exp(-kI * h(0, 0).real() * t);
    return out;
  }
  if (h.rows() == 2) return exp_hermitian_2x2(h, t);

  const Operator sym = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<Operator> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw ValidationError("matrix_exponential: eigendecomposition failed");
  }
  const Eigen::VectorXd& w = solver.eigenvalues();
  const Operator& v = solver.eigenvectors();
  Eigen::VectorXcd phases(w.size());
  for (Eigen::Index k = 0; k < w.size(); ++k) phases(k) = std::exp(-kI * w(k) * t);
  return v * phases.asDiagonal() * v.adjoint();
}

Operator commutator(const Operator& a, const Operator& b) { return a * b - b * a; }

Operator identity(std::size_t dim) {
  return Operator::Identity(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
}

Operator pauli_x() {
  Operator m(2, 2);
  m << 0.0, 1.0,
       1.0, 0.0;
  return m;
}

Operator pauli_y() {
  Operator m(2, 2);
  m << 0.0, -kI,
       kI, 0.0;
  return m;
}

Operator pauli_z() {
  Operator m(2, 2);
  m << 1.0, 0.0,
       0.0, -1.0;
  return m;
}

StateVector basis_state(std::size_t dim, std::size_t k) {
  if (k >= dim) throw ValidationError("basis_state: index out of range");
  StateVector v = StateVector::Zero(static_cast<Eigen::Index>(dim));
  v(static_cast<Eigen::Index>(k)) = 1.0;
  return v;
}

Operator outer(const StateVector& ket, const StateVector& bra) { return ket * bra.adjoint(); }

StateVector normalized(const StateVector& v) {
  const double n = v.norm();
  if (n == 0.0) throw ValidationError("normalized: zero vector");
  return v / n;
}

}  // namespace nhqc::core
