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


#include "nhqc/core/density_matrix.hpp"

#include "nhqc/core/errors.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <sstream>
#include <string>

namespace nhqc::core {

namespace {

std::string scientific(double v) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << v;
  return os.str();
}

}  // namespace

DensityMatrix::DensityMatrix(Operator rho) : rho_(std::move(rho)) {
  if (rho_.rows() != rho_.cols() || rho_.rows() == 0) {
    throw ValidationError("DensityMatrix: matrix must be square and non-empty");
  }
  if (!is_hermitian(rho_, kHermitianTol)) {
    throw ValidationError("DensityMatrix: not Hermitian");
  }
  const Complex tr = rho_.trace();
  if (std::abs(tr - 1.0) > kTraceTol) {
    throw ValidationError("DensityMatrix: trace " + scientific(tr.real()) + " differs from 1");
  }
  const Operator sym = 0.5 * (rho_ + rho_.adjoint());
  Eigen::SelfAdjointEigenSolver<Operator> solver(sym, Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < kEigenvalueFloor) {
    throw ValidationError("DensityMatrix: negative eigenvalue " +
                          scientific(solver.eigenvalues().minCoeff()));
  }
}

DensityMatrix DensityMatrix::pure(const StateVector& psi) {
  if (std::abs(psi.norm() - 1.0) > 1e-12) {
    throw ValidationError("DensityMatrix::pure: state is not normalized");
  }
  return DensityMatrix(outer(psi, psi));
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
  return DensityMatrix(identity(dim) / static_cast<double>(dim));
}

}  // namespace nhqc::core
