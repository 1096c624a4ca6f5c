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


#include "nhqc/core/lindblad.hpp"

#include "nhqc/core/errors.hpp"
#include "nhqc/core/propagator.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace nhqc::core {

namespace {

struct Channel {
  Operator op;
  Operator op_dag;
  Operator op_dag_op;
  double half_rate;
};

Operator rhs(const Operator& rho, const Operator& h, const std::vector<Channel>& channels) {
  Operator d = kI * (rho * h - h * rho);
  for (const auto& c : channels) {
    d += c.half_rate * (2.0 * c.op * rho * c.op_dag - c.op_dag_op * rho - rho * c.op_dag_op);
  }
  return d;
}

}  // namespace

DensityMatrix lindblad_evolve(const Schedule& schedule, const std::vector<Operator>& collapse_ops,
                              const std::vector<double>& rates, const DensityMatrix& rho0,
                              const LindbladOptions& options) {
  if (collapse_ops.size() != rates.size()) {
    throw ValidationError("lindblad_evolve: one rate per collapse operator is required");
  }
  const Eigen::Index dim = rho0.dim();
  std::vector<Channel> channels;
  for (std::size_t j = 0; j < rates.size(); ++j) {
    if (!(rates[j] >= 0.0)) {
      throw ValidationError("lindblad_evolve: negative rate " + std::to_string(rates[j]));
    }
    if (collapse_ops[j].rows() != dim || collapse_ops[j].cols() != dim) {
      throw ValidationError("lindblad_evolve: collapse operator dimension mismatch");
    }
    if (rates[j] == 0.0) continue;
    const Operator dag = collapse_ops[j].adjoint();
    channels.push_back({collapse_ops[j], dag, dag * collapse_ops[j], 0.5 * rates[j]});
  }

  const double step = resolve_step(schedule, options.step);
  Operator rho = rho0.matrix();
  const std::vector<double> edges = schedule.segment_edges();
  for (std::size_t seg = 0; seg + 1 < edges.size(); ++seg) {
    const double a = edges[seg];
    const double len = edges[seg + 1] - a;
    if (len <= 0.0) continue;
    const long n = std::max(1L, static_cast<long>(std::ceil(len / step - 1e-9)));
    const double h = len / static_cast<double>(n);
    for (long k = 0; k < n; ++k) {
      const double t = a + static_cast<double>(k) * h;
      const Operator h0 = schedule.hamiltonian_at(t);
      const Operator hm = schedule.hamiltonian_at(t + 0.5 * h);
      // Piecewise schedules switch at a breakpoint; the last stage of a
      // segment takes the left limit.
      const double t_end = (k + 1 == n) ? std::nextafter(a + len, a) : t + h;
      const Operator h1 = schedule.hamiltonian_at(t_end);
      if (h0.rows() != dim) throw ValidationError("lindblad_evolve: Hamiltonian dimension mismatch");
      const Operator k1 = rhs(rho, h0, channels);
      const Operator k2 = rhs(rho + 0.5 * h * k1, hm, channels);
      const Operator k3 = rhs(rho + 0.5 * h * k2, hm, channels);
      const Operator k4 = rhs(rho + h * k3, h1, channels);
      rho += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);

      const double drift = std::abs(rho.trace() - 1.0);
      if (!(drift <= kTraceDriftLimit)) {
        throw IntegrationError("lindblad_evolve: trace drift " + std::to_string(drift) + " at t = " +
                               std::to_string(t + h));
      }
      if (options.observer) options.observer(t + h, rho);
    }
  }
  return DensityMatrix(0.5 * (rho + rho.adjoint()));
}

}  // namespace nhqc::core
