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

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <numbers>

namespace nhqc::core {

using Complex = std::complex<double>;

/// Dense complex square matrix: Hamiltonians, propagators and density
/// matrices all share this carrier. Energies and rates are angular
/// frequencies, time is in their inverse.
using Operator = Eigen::MatrixXcd;
using StateVector = Eigen::VectorXcd;

inline constexpr Complex kI{0.0, 1.0};
inline constexpr double kPi = std::numbers::pi;

inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kUnitaryTol = 1e-10;

double max_abs(const Operator& m);
double max_abs_diff(const Operator& a, const Operator& b);

/// max |b - e^{ia} a| with the phase a chosen to align the two traces.
double max_abs_diff_up_to_phase(const Operator& a, const Operator& b);

bool is_hermitian(const Operator& h, double tol = kHermitianTol);
bool is_unitary(const Operator& u, double tol = kUnitaryTol);

/// exp(-i H t) for Hermitian H. Throws ValidationError otherwise; the
/// Hermiticity check is scaled by max(1, max|H|).
Operator matrix_exponential(const Operator& h, double t);

Operator commutator(const Operator& a, const Operator& b);

Operator identity(std::size_t dim);
Operator pauli_x();
Operator pauli_y();
Operator pauli_z();

StateVector basis_state(std::size_t dim, std::size_t k);

/// |ket><bra|
Operator outer(const StateVector& ket, const StateVector& bra);
inline Operator projector(const StateVector& v) { return outer(v, v); }

/// Normalized copy; throws ValidationError for the zero vector.
StateVector normalized(const StateVector& v);

}  // namespace nhqc::core
