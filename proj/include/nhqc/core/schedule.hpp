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

#include <functional>
#include <vector>

namespace nhqc::core {

/// A time-dependent Hamiltonian on [start, start + duration].
///
/// `breakpoints` lists interior times where the Hamiltonian is allowed to
/// jump (piecewise pulses); integrators never step across them.
struct Schedule {
  double start = 0.0;
  double duration = 0.0;
  std::function<Operator(double)> hamiltonian_at;
  double recommended_step = 0.0;
  std::vector<double> breakpoints;

  double end() const noexcept { return start + duration; }

  /// Same Hamiltonian restricted to [from, to].
  Schedule slice(double from, double to) const;

  /// Integration segments [t_k, t_{k+1}] between start, breakpoints and end.
  std::vector<double> segment_edges() const;
};

/// min(duration / 2000, 0.002 / max_frequency): the default step for
/// schedules whose largest energy scale is `max_frequency`.
double default_step(double duration, double max_frequency);

}  // namespace nhqc::core
