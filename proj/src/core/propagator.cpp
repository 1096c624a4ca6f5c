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


#include "nhqc/core/propagator.hpp"

#include "nhqc/core/errors.hpp"

#include <algorithm>
#include <cmath>

namespace nhqc::core {

namespace {

constexpr double kGaussOffset = 0.28867513459481288225;  // sqrt(3)/6
constexpr double kMagnusCoeff = 0.14433756729740644113;  // sqrt(3)/12

void check_hermitian(const Operator& h) {
  if (!is_hermitian(h, kHermitianTol * std::max(1.0, max_abs(h)))) {
    throw ValidationError("schedule Hamiltonian is not Hermitian");
  }
}

}  // namespace

double resolve_step(const Schedule& schedule, std::optional<double> override_step) {
  if (!(schedule.duration > 0.0)) {
    throw ValidationError("schedule duration must be positive");
  }
  double step = override_step.value_or(schedule.recommended_step);
  if (step <= 0.0) step = schedule.duration / 2000.0;
  if (step > schedule.duration * (1.0 + 1e-12)) {
    throw ValidationError("integration step exceeds schedule duration");
  }
  return step;
}

Operator propagate(const Schedule& schedule, const PropagateOptions& options) {
  const double step = resolve_step(schedule, options.step);
  if (!schedule.hamiltonian_at) throw ValidationError("propagate: schedule has no Hamiltonian");

  const std::vector<double> edges = schedule.segment_edges();
  Operator u;
  for (std::size_t seg = 0; seg + 1 < edges.size(); ++seg) {
    const double a = edges[seg];
    const double len = edges[seg + 1] - a;
    if (len <= 0.0) continue;
    const auto n = static_cast<long>(std::ceil(len / step - 1e-9));
    const double h = len / static_cast<double>(std::max(1L, n));
    for (long k = 0; k < std::max(1L, n); ++k) {
      const double t0 = a + static_cast<double>(k) * h;
      const Operator h1 = schedule.hamiltonian_at(t0 + (0.5 - kGaussOffset) * h);
      const Operator h2 = schedule.hamiltonian_at(t0 + (0.5 + kGaussOffset) * h);
      check_hermitian(h1);
      check_hermitian(h2);
      Operator gen = 0.5 * (h1 + h2) - kI * (kMagnusCoeff * h) * commutator(h2, h1);
      gen = 0.5 * (gen + gen.adjoint());
      const Operator step_u = matrix_exponential(gen, h);
      if (u.size() == 0) {
        u = step_u;
      } else {
        u = step_u * u;
      }
      if (options.observer) options.observer(t0 + h, u);
    }
  }
  return u;
}

}  // namespace nhqc::core
