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


#include "nhqc/cli/reports.hpp"

#include "nhqc/core/errors.hpp"
#include "nhqc/core/fidelity.hpp"
#include "nhqc/delta/delta_system.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace nhqc::cli {

using nlohmann::json;
using core::kPi;
using synthesis::GateSpec;
using synthesis::Scheme;

std::string format_number(double value) {
  if (value == 0.0) return "0";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

CsvWriter::CsvWriter(const std::filesystem::path& path, const std::string& header,
                     const std::vector<std::string>& columns)
    : out_(path, std::ios::binary | std::ios::trunc), columns_(columns.size()) {
  if (!out_) throw ConfigError(path.string() + ": cannot open output file for writing");
  out_ << "# " << header << "\n";
  for (std::size_t i = 0; i < columns.size(); ++i) out_ << (i ? "," : "") << columns[i];
  out_ << "\n";
}

void CsvWriter::row(const std::vector<Cell>& cells) {
  if (cells.size() != columns_) throw ValidationError("CSV row has the wrong number of cells");
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out_ << ",";
    std::visit(
        [this](const auto& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, double>) {
            out_ << format_number(v);
          } else {
            out_ << v;
          }
        },
        cells[i]);
  }
  out_ << "\n";
  ++rows_;
}

namespace {

double round12(double v) { return std::isfinite(v) ? std::strtod(format_number(v).c_str(), nullptr) : v; }

void round_numbers(json& j) {
  if (j.is_number_float()) {
    j = round12(j.get<double>());
  } else if (j.is_structured()) {
    for (auto& child : j) round_numbers(child);
  }
}

}  // namespace

void write_json(const std::filesystem::path& path, const std::string& header, json record) {
  round_numbers(record);
  record["_header"] = header;
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ConfigError(path.string() + ": cannot open output file for writing");
  out << record.dump(2) << "\n";
}

namespace {

const std::vector<std::string> kSweepColumns = {"scheme",  "gamma",         "theta",    "phi",
                                                "delta",   "epsilon",       "kappa",    "tau_over_tauc",
                                                "fidelity", "fidelity_diff_vs_single_loop", "fidelity_diff_vs_toc"};

class Outputs {
 public:
  Outputs(std::filesystem::path dir, std::string header) : dir_(std::move(dir)), header_(std::move(header)) {}

  CsvWriter csv(const std::string& name, const std::vector<std::string>& columns) {
    files_.push_back(dir_ / name);
    return CsvWriter(files_.back(), header_, columns);
  }

  void json_file(const std::string& name, const json& record) {
    files_.push_back(dir_ / name);
    write_json(files_.back(), header_, record);
  }

  const std::vector<std::filesystem::path>& files() const { return files_; }

 private:
  std::filesystem::path dir_;
  std::string header_;
  std::vector<std::filesystem::path> files_;
};

noise::RunOptions run_options(const RunContext& ctx) {
  noise::RunOptions o;
  o.threads = std::max<std::size_t>(1, ctx.threads);
  o.step = ctx.step;
  return o;
}

void sweep_rows(CsvWriter& w, const noise::SweepResult& r, const std::string& filter) {
  const auto& loop = r.of(Scheme::SingleLoop).fidelity;
  const auto& toc = r.of(Scheme::TocBaseline).fidelity;
  for (const auto& s : r.series) {
    if (filter != "all" && synthesis::scheme_from_string(filter) != s.scheme) continue;
    for (std::size_t c = 0; c < r.cell_count(); ++c) {
      const double f = s.fidelity[c];
      w.row({synthesis::to_string(s.scheme), r.spec.gamma, r.spec.theta, r.spec.phi, r.delta_at(c), r.epsilon_at(c),
             r.kappa_at(c), s.tau_over_tauc, f, f - loop[c], f - toc[c]});
    }
  }
}

json sweep_summary(const noise::SweepResult& r) {
  json out = json::object();
  for (const auto& s : r.series) {
    const auto& loop = r.of(Scheme::SingleLoop).fidelity;
    const auto& toc = r.of(Scheme::TocBaseline).fidelity;
    double min_f = 1.0;
    double mean_s = 0.0;
    double mean_t = 0.0;
    for (std::size_t c = 0; c < s.fidelity.size(); ++c) {
      min_f = std::min(min_f, s.fidelity[c]);
      mean_s += s.fidelity[c] - loop[c];
      mean_t += s.fidelity[c] - toc[c];
    }
    const double n = static_cast<double>(s.fidelity.size());
    out[synthesis::to_string(s.scheme)] = {{"tau_over_tauc", s.tau_over_tauc},
                                           {"min_fidelity", min_f},
                                           {"mean_diff_vs_single_loop", mean_s / n},
                                           {"mean_diff_vs_toc", mean_t / n}};
  }
  return out;
}

json matrix_json(const core::Operator& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(row);
  }
  return rows;
}

json run_synthesize(const ExperimentConfig& c, Outputs& out) {
  const Scheme scheme = synthesis::scheme_from_string(c.scheme);
  const auto pulse = synthesis::make_pulse(scheme, c.gate, c.delta2_over_omega, 1.0);
  json record = {{"scheme", synthesis::to_string(scheme)},
                 {"gate", synthesis::to_json(c.gate)},
                 {"delta2_over_omega", c.delta2_over_omega},
                 {"units", "Omega = 1"},
                 {"eta", pulse.eta},
                 {"tau", pulse.tau},
                 {"tau_c", 2.0 * kPi},
                 {"tau_over_tauc", pulse.tau_over_tauc()}};
  if (scheme == Scheme::Ours) {
    record["solution"] = synthesis::to_json(synthesis::solve_toc_parameters(c.gate.gamma, c.delta2_over_omega, 1.0));
  }
  out.json_file("synthesize.json", record);
  return record;
}

json run_evolve(const ExperimentConfig& c, const RunContext& ctx, Outputs& out) {
  const auto pulse = synthesis::make_pulse(synthesis::scheme_from_string(c.scheme), c.gate, c.delta2_over_omega, 1.0);
  const core::StateVector input = initial_state_vector(c.initial_state);
  const noise::StateRun run = noise::decoherence_state_run(pulse, input, c.noise, c.samples, run_options(ctx));
  auto states = out.csv("evolve.csv", {"t", "p0", "p1", "p2", "fidelity"});
  for (std::size_t i = 0; i < run.times.size(); ++i) {
    const auto& p = run.populations[i];
    states.row({run.times[i], p[0], p[1], p[2], run.fidelity[i]});
  }
  const auto bloch =
      delta::bloch_trajectory(synthesis::rotating_schedule(pulse), core::embed(input, 3), c.samples);
  auto traj = out.csv("bloch.csv", {"t", "x", "y", "z", "leakage"});
  for (const auto& b : bloch) traj.row({b.t, b.x, b.y, b.z, b.leakage});
  json record = {{"scheme", synthesis::to_string(pulse.scheme)},
                 {"tau", run.tau},
                 {"final_fidelity", run.final_fidelity},
                 {"final_populations", run.populations.back()}};
  out.json_file("evolve.json", record);
  return record;
}

json run_sweep(const ExperimentConfig& c, const RunContext& ctx, Outputs& out) {
  const auto r = noise::robustness_grid(c.gate, c.delta2_over_omega, c.delta_grid.values(), c.epsilon_grid.values(),
                                        run_options(ctx));
  auto w = out.csv("sweep.csv", kSweepColumns);
  sweep_rows(w, r, c.scheme);
  return {{"rows", w.rows()}, {"schemes", sweep_summary(r)}};
}

json run_decoherence(const ExperimentConfig& c, const RunContext& ctx, Outputs& out) {
  const auto r = noise::decoherence_gate_curve(c.gate, c.delta2_over_omega, c.kappa_grid.values(), run_options(ctx));
  auto w = out.csv("decoherence.csv", kSweepColumns);
  sweep_rows(w, r, c.scheme);
  return {{"rows", w.rows()}, {"schemes", sweep_summary(r)}};
}

json run_circuit(const ExperimentConfig& c, const RunContext& ctx, Outputs& out) {
  transmon::SimulationOptions opts;
  opts.step = ctx.step;
  json record;
  if (c.circuit_target == CircuitTarget::Logical) {
    const double omega = c.lattice.omega;
    const auto r = transmon::simulate_logical_gate(c.gate, c.delta2_over_omega * omega, omega, c.lattice, opts);
    const auto& m = r.mapping;
    auto w = out.csv("leakage.csv", {"t", "pop_single_excitation", "pop_double_excitation", "pop_level2"});
    for (const auto& s : r.leakage) w.row({s.t, s.pop_single_excitation, s.pop_double_excitation, s.pop_level2});
    record = {{"target", "logical"},
              {"gate", synthesis::to_json(c.gate)},
              {"fidelity", r.fidelity},
              {"max_leakage", r.max_leakage},
              {"flagged", r.flagged},
              {"tau_ns", m.tau},
              {"mapping",
               {{"eta", m.eta},
                {"frame_detunings", m.frame_detunings},
                {"beta1", m.beta1},
                {"beta2", m.beta2},
                {"nu1", m.nu1},
                {"nu2", m.nu2},
                {"g12_required", m.g12_required},
                {"g12_configured", m.g12_configured},
                {"g12_residual", m.g12_residual},
                {"g12_within_tolerance", m.g12_within_tolerance}}},
              {"gate_matrix", matrix_json(r.gate)},
              {"units", "rad/ns and ns"}};
  } else {
    const double g = std::sqrt(2.0) * transmon::bessel_j1(c.lattice.beta3) * c.lattice.g23;
    const auto r = transmon::two_qubit_physical(c.lattice, c.gamma_prime_over_pi * kPi, c.delta3_over_g * g, opts);
    record = {{"target", "pair"},
              {"gamma_prime", c.gamma_prime_over_pi * kPi},
              {"fidelity", r.fidelity},
              {"nu3", r.nu3},
              {"return_00", std::norm(r.unitary(0, 0))},
              {"solution", synthesis::to_json(r.solution)},
              {"gate_matrix", matrix_json(r.gate)},
              {"units", "rad/ns and ns"}};
  }
  out.json_file("circuit.json", record);
  return record;
}

const std::vector<double> kFig2Ratios = {-1.0, -0.5, -0.25, 0.0, 0.25, 0.5, 1.0};

json preset_fig2(Outputs& out) {
  auto w = out.csv("fig2.csv", {"delta2_over_omega", "gamma_over_pi", "gamma", "eta", "tau_over_tauc"});
  for (double ratio : kFig2Ratios) {
    for (int k = 1; k < 200; ++k) {
      const double g = k / 100.0;
      const auto sol = synthesis::solve_toc_parameters(g * kPi, ratio, 1.0);
      w.row({ratio, g, g * kPi, sol.eta, sol.tau_over_tauc()});
    }
  }
  return {{"rows", w.rows()}};
}

json preset_fig3(const RunContext& ctx, bool joint, Outputs& out) {
  const std::vector<GateSpec> gates = {GateSpec::rx(kPi / 2.0), GateSpec::ry(kPi / 2.0), GateSpec::rz(kPi / 2.0)};
  const auto axis = noise::linspace(-0.1, 0.1, 41);
  const std::vector<double> zero = {0.0};
  json record = json::object();
  auto emit = [&](const std::string& name, const std::vector<double>& d, const std::vector<double>& e) {
    auto w = out.csv(name, kSweepColumns);
    json panels = json::array();
    for (const auto& g : gates) {
      const auto r = noise::robustness_grid(g, -0.5, d, e, run_options(ctx));
      sweep_rows(w, r, "all");
      panels.push_back({{"gate", synthesis::to_json(g)}, {"schemes", sweep_summary(r)}});
    }
    record[name] = panels;
  };
  emit("fig3_delta.csv", axis, zero);
  emit("fig3_epsilon.csv", zero, axis);
  if (joint) emit("fig3_joint.csv", axis, axis);
  return record;
}

json preset_fig4(const RunContext& ctx, Outputs& out) {
  struct Case {
    const char* gate;
    GateSpec spec;
    const char* input;
  };
  const std::vector<Case> cases = {{"rx", GateSpec::rx(kPi / 2.0), "0"}, {"rz", GateSpec::rz(kPi / 2.0), "plus"}};
  auto series = out.csv("fig4.csv", {"gate", "input", "t", "p0", "p1", "p2", "fidelity"});
  auto finals = out.csv("fig4_final.csv", {"gate", "input", "tau", "final_fidelity"});
  json record = json::object();
  for (const auto& k : cases) {
    const auto pulse = synthesis::make_pulse(Scheme::Ours, k.spec, -0.5, 1.0);
    const auto run = noise::decoherence_state_run(pulse, initial_state_vector(k.input), noise::NoiseModel::uniform(4e-4),
                                                  200, run_options(ctx));
    for (std::size_t i = 0; i < run.times.size(); ++i) {
      const auto& p = run.populations[i];
      series.row({k.gate, k.input, run.times[i], p[0], p[1], p[2], run.fidelity[i]});
    }
    finals.row({k.gate, k.input, run.tau, run.final_fidelity});
    record[k.gate] = run.final_fidelity;
  }
  return record;
}

json preset_fig5(const RunContext& ctx, Outputs& out) {
  const auto r =
      noise::decoherence_gate_curve(GateSpec::rx(kPi / 2.0), -0.5, noise::linspace(0.0, 1e-3, 11), run_options(ctx));
  auto w = out.csv("fig5.csv", kSweepColumns);
  sweep_rows(w, r, "all");
  return {{"rows", w.rows()}, {"schemes", sweep_summary(r)}};
}

json preset_table_accel(Outputs& out) {
  auto w = out.csv("table_accel.csv",
                   {"gamma_over_pi", "delta2_over_omega", "eta", "tau_over_tauc", "toc_tau_over_tauc", "speedup"});
  for (double g : {0.25, 0.5, 1.0, 1.5, 1.75}) {
    const double toc = synthesis::toc_baseline(GateSpec{g * kPi, kPi / 2.0, 0.0}, 1.0).tau_over_tauc();
    for (double ratio : kFig2Ratios) {
      const auto sol = synthesis::solve_toc_parameters(g * kPi, ratio, 1.0);
      w.row({g, ratio, sol.eta, sol.tau_over_tauc(), toc, toc / sol.tau_over_tauc()});
    }
  }
  return {{"rows", w.rows()}};
}

json run_preset_outputs(const ExperimentConfig& c, const RunContext& ctx, Outputs& out) {
  if (c.preset == "fig2") return preset_fig2(out);
  if (c.preset == "fig3") return preset_fig3(ctx, c.joint, out);
  if (c.preset == "fig4") return preset_fig4(ctx, out);
  if (c.preset == "fig5") return preset_fig5(ctx, out);
  if (c.preset == "table-accel") return preset_table_accel(out);
  throw ConfigError("unknown preset '" + c.preset + "'");
}

}  // namespace

RunSummary run_config(const ExperimentConfig& config, const RunContext& context) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();
  std::error_code ec;
  std::filesystem::create_directories(context.out_dir, ec);
  if (ec || !std::filesystem::is_directory(context.out_dir)) {
    throw ConfigError(context.out_dir.string() + ": cannot create output directory");
  }
  const std::string hash = hash_hex(config.hash());
  const std::string header = config.kind == ExperimentKind::Preset
                                 ? "nhqc preset=" + config.preset + " config=" + hash
                                 : "nhqc " + to_string(config.kind) + " config=" + hash;
  Outputs out(context.out_dir, header);

  json record;
  switch (config.kind) {
    case ExperimentKind::Synthesize: record = run_synthesize(config, out); break;
    case ExperimentKind::Evolve: record = run_evolve(config, context, out); break;
    case ExperimentKind::Sweep: record = run_sweep(config, context, out); break;
    case ExperimentKind::Decoherence: record = run_decoherence(config, context, out); break;
    case ExperimentKind::Circuit: record = run_circuit(config, context, out); break;
    case ExperimentKind::Preset: record = run_preset_outputs(config, context, out); break;
  }

  RunSummary summary;
  summary.files = out.files();
  summary.record = record;
  json names = json::array();
  for (const auto& f : summary.files) names.push_back(f.filename().string());
  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const auto meta_path = context.out_dir / "metadata.json";
  write_json(meta_path, header,
             {{"tool", "nhqc"},
              {"version", kToolVersion},
              {"kind", to_string(config.kind)},
              {"config", config.to_json()},
              {"config_hash", hash},
              {"outputs", names},
              {"threads", context.threads},
              {"wall_time_seconds", wall}});
  summary.files.push_back(meta_path);
  return summary;
}

RunSummary run_preset(const std::string& name, const RunContext& context, bool joint) {
  ExperimentConfig c;
  c.kind = ExperimentKind::Preset;
  c.preset = name;
  c.joint = joint;
  c.output = context.out_dir.string();
  return run_config(c, context);
}

}  // namespace nhqc::cli
