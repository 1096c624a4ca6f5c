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
#include "nhqc/core/linalg.hpp"

#include <array>
#include <functional>

namespace nhqc::core {

/// |Tr(U_ideal^dag U_actual)| / Tr(U_ideal^dag U_ideal).
///
/// The magnitude keeps the value real and in [0, 1] for perturbed gates and
/// makes it insensitive to a global phase of U_actual.
double trace_fidelity(const Operator& ideal, const Operator& actual);

/// <psi|rho|psi>
double state_fidelity(const DensityMatrix& rho, const StateVector& psi);

/// |0>, |1>, (|0> +- |1>)/sqrt2, (|0> +- i|1>)/sqrt2
std::array<StateVector, 6> cardinal_states();

using Channel = std::function<DensityMatrix(const StateVector&)>;

/// Average of <target_j|rho_j|target_j> over the six cardinal inputs, where
/// rho_j = channel(input_j) and target_j = ideal_gate * input_j, embedded
/// (zero padded) into the output dimension of the channel.
double cardinal_gate_fidelity(const Operator& ideal_gate, const Channel& channel);

/// Zero-pads a state into a larger space.
StateVector embed(const StateVector& v, Eigen::Index dim);

}  // namespace nhqc::core
