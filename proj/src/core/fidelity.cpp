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


#include "nhqc/core/fidelity.hpp"

#include "nhqc/core/errors.hpp"

#include <cmath>

namespace nhqc::core {

double trace_fidelity(const Operator& ideal, const Operator& actual) {
  if (ideal.rows() != actual.rows() || ideal.cols() != actual.cols() || ideal.rows() != ideal.cols()) {
    throw ValidationError("trace_fidelity: dimension mismatch");
  }
  const double norm = (ideal.adjoint() * ideal).trace().real();
  return std::abs((ideal.adjoint() * actual).trace()) / norm;
}

double state_fidelity(const DensityMatrix& rho, const StateVector& psi) {
  if (psi.size() != rho.dim()) throw ValidationError("state_fidelity: dimension mismatch");
  return (psi.adjoint() * rho.matrix() * psi)(0, 0).real();
}

std::array<StateVector, 6> cardinal_states() {
  const double s = 1.0 / std::sqrt(2.0);
  std::array<StateVector, 6> out;
  for (auto& v : out) v = StateVector::Zero(2);
  out[0](0) = 1.0;
  out[1](1) = 1.0;
  out[2] << s, s;
  out[3] << s, -s;
  out[4] << s, kI * s;
  out[5] << s, -kI * s;
  return out;
}

StateVector embed(const StateVector& v, Eigen::Index dim) {
  if (dim < v.size()) throw ValidationError("embed: target dimension too small");
  StateVector out = StateVector::Zero(dim);
  out.head(v.size()) = v;
  return out;
}

double cardinal_gate_fidelity(const Operator& ideal_gate, const Channel& channel) {
  if (ideal_gate.rows() != 2 || ideal_gate.cols() != 2) {
    throw ValidationError("cardinal_gate_fidelity: ideal gate must act on a qubit");
  }
  double sum = 0.0;
  for (const StateVector& input : cardinal_states()) {
    const DensityMatrix rho = channel(input);
    const StateVector target = embed(ideal_gate * input, rho.dim());
    sum += state_fidelity(rho, target);
  }
  return sum / 6.0;
}

}  // namespace nhqc::core
