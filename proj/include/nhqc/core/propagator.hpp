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

#include "nhqc/core/schedule.hpp"

#include <functional>
#include <optional>

namespace nhqc::core {

struct PropagateOptions {
  /// Overrides the schedule's recommended step when set.
  std::optional<double> step;
  /// Called after every step with the current time and propagator.
  std::function<void(double, const Operator&)> observer;
};

/// Time-ordered propagator T exp(-i \int H dt) over the schedule.
///
/// Each step of length h exponentiates the fourth-order Magnus generator
///   (H1 + H2)/2 - i (sqrt(3) h / 12) [H2, H1]
/// with H1, H2 sampled at the two Gauss-Legendre nodes. Steps never cross a
/// breakpoint. Throws ValidationError for a non-positive duration or a step
/// longer than the duration.
Operator propagate(const Schedule& schedule, const PropagateOptions& options = {});

/// Resolved step for a schedule (override, else recommended, else default).
double resolve_step(const Schedule& schedule, std::optional<double> override_step);

}  // namespace nhqc::core
