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


#include "nhqc/core/schedule.hpp"

#include "nhqc/core/errors.hpp"

#include <algorithm>
#include <cmath>

namespace nhqc::core {

Schedule Schedule::slice(double from, double to) const {
  if (!(to > from) || from < start - 1e-12 || to > end() + 1e-12) {
    throw ValidationError("Schedule::slice: interval outside the schedule");
  }
  Schedule out = *this;
  out.start = from;
  out.duration = to - from;
  out.breakpoints.clear();
  for (double b : breakpoints) {
    if (b > from && b < to) out.breakpoints.push_back(b);
  }
  return out;
}

std::vector<double> Schedule::segment_edges() const {
  std::vector<double> edges{start};
  std::vector<double> interior;
  for (double b : breakpoints) {
    if (b > start && b < end()) interior.push_back(b);
  }
  std::sort(interior.begin(), interior.end());
  edges.insert(edges.end(), interior.begin(), interior.end());
  edges.push_back(end());
  return edges;
}

double default_step(double duration, double max_frequency) {
  if (!(duration > 0.0)) throw ValidationError("default_step: duration must be positive");
  double step = duration / 2000.0;
  if (max_frequency > 0.0) step = std::min(step, 0.002 / max_frequency);
  return step;
}

}  // namespace nhqc::core
