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

namespace nhqc::core {

inline constexpr double kTraceTol = 1e-10;
inline constexpr double kEigenvalueFloor = -1e-10;

/// Validated density matrix: Hermitian (1e-12), unit trace (1e-10) and
/// eigenvalues >= -1e-10. Immutable after construction.
class DensityMatrix {
 public:
  explicit DensityMatrix(Operator rho);

  static DensityMatrix pure(const StateVector& psi);
  static DensityMatrix maximally_mixed(std::size_t dim);

  const Operator& matrix() const noexcept { return rho_; }
  Eigen::Index dim() const noexcept { return rho_.rows(); }
  double population(Eigen::Index k) const { return rho_(k, k).real(); }

 private:
  Operator rho_;
};

}  // namespace nhqc::core
