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
#include "nhqc/core/schedule.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace nhqc::core {

inline constexpr double kTraceDriftLimit = 1e-6;

struct LindbladOptions {
  std::optional<double> step;
  /// Called after every step with (t, rho(t)).
  std::function<void(double, const Operator&)> observer;
};

/// Integrates
///   d rho/dt = i [rho, H(t)] + sum_j (rate_j / 2) (2 A rho A^dag - A^dag A rho - rho A^dag A)
/// with fixed-step classical RK4 over the schedule.
///
/// Throws ValidationError for negative rates or mismatched dimensions and
/// IntegrationError when the trace drifts by more than 1e-6.
DensityMatrix lindblad_evolve(const Schedule& schedule, const std::vector<Operator>& collapse_ops,
                              const std::vector<double>& rates, const DensityMatrix& rho0,
                              const LindbladOptions& options = {});

}  // namespace nhqc::core
