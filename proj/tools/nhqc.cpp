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

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

namespace {

using namespace nhqc;
using namespace nhqc::cli;

constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

struct CommonFlags {
  std::string config;
  std::string out;
  std::size_t threads = std::max(1U, std::thread::hardware_concurrency());
  double step_override = 0.0;
};

void add_common(CLI::App* cmd, CommonFlags& flags, bool config_required) {
  auto* opt = cmd->add_option("--config", flags.config, "Experiment configuration (JSON)");
  if (config_required) opt->required();
  cmd->add_option("--out", flags.out, "Output directory (overrides the config's output key)");
  cmd->add_option("--threads", flags.threads, "Worker threads for grid experiments")->check(CLI::PositiveNumber);
  cmd->add_option("--step-override", flags.step_override, "Integration step, in the experiment's time unit")
      ->check(CLI::PositiveNumber);
}

RunContext context_for(const CommonFlags& flags, const ExperimentConfig& config) {
  RunContext ctx;
  ctx.out_dir = flags.out.empty() ? config.output : flags.out;
  ctx.threads = flags.threads;
  if (flags.step_override > 0.0) ctx.step = flags.step_override;
  return ctx;
}

bool declares_kind(const std::string& path) {
  std::ifstream in(path);
  try {
    return nlohmann::json::parse(in).contains("kind");
  } catch (const std::exception&) {
    return false;
  }
}

ExperimentConfig config_for(const CommonFlags& flags, ExperimentKind kind) {
  ExperimentConfig config;
  if (!flags.config.empty()) {
    config = load_config(flags.config);
    if (declares_kind(flags.config) && config.kind != kind) {
      throw ConfigError(flags.config + ": key '/kind': config is a '" + to_string(config.kind) +
                        "' experiment, not '" + to_string(kind) + "'");
    }
  }
  config.kind = kind;
  config.validate();
  return config;
}

void report(const RunSummary& summary) {
  for (const auto& f : summary.files) std::cout << "wrote " << f.string() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"nhqc: holonomic gate synthesis, simulation and reports"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("nhqc ") + kToolVersion);

  std::vector<std::pair<CLI::App*, ExperimentKind>> experiments;
  CommonFlags flags;
  const std::vector<std::pair<const char*, ExperimentKind>> kinds = {
      {"synthesize", ExperimentKind::Synthesize}, {"evolve", ExperimentKind::Evolve},
      {"sweep", ExperimentKind::Sweep},           {"decoherence", ExperimentKind::Decoherence},
      {"circuit", ExperimentKind::Circuit}};
  const std::map<std::string, std::string> help = {
      {"synthesize", "Solve pulse parameters for a gate"},
      {"evolve", "Lindblad state evolution with populations, fidelity and Bloch trajectory"},
      {"sweep", "Systematic-error robustness grid"},
      {"decoherence", "Gate fidelity versus decoherence rate"},
      {"circuit", "Transmon-level simulation of a logical or two-qubit gate"}};
  for (const auto& [name, kind] : kinds) {
    auto* cmd = app.add_subcommand(name, help.at(name));
    add_common(cmd, flags, false);
    experiments.emplace_back(cmd, kind);
  }

  auto* run = app.add_subcommand("run", "Run the experiment described by a config file");
  add_common(run, flags, true);

  std::string preset_name;
  bool joint = false;
  auto* preset = app.add_subcommand("preset", "Regenerate a figure or table dataset");
  preset->add_option("name", preset_name, "fig2, fig3, fig4, fig5 or table-accel")->required();
  preset->add_flag("--joint", joint, "fig3: also emit the joint delta x epsilon grid");
  add_common(preset, flags, false);

  std::string validate_path;
  auto* validate = app.add_subcommand("validate", "Check a config file without running it");
  validate->add_option("config", validate_path, "Config file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (validate->parsed()) {
      const ExperimentConfig c = load_config(validate_path);
      std::cout << "ok: " << to_string(c.kind) << " config=" << hash_hex(c.hash()) << "\n";
      return 0;
    }
    if (preset->parsed()) {
      ExperimentConfig c;
      c.kind = ExperimentKind::Preset;
      c.preset = preset_name;
      c.joint = joint;
      c.validate();
      RunContext ctx = context_for(flags, c);
      if (flags.out.empty()) ctx.out_dir = "out/" + preset_name;
      c.output = ctx.out_dir.string();
      report(run_config(c, ctx));
      return 0;
    }
    if (run->parsed()) {
      const ExperimentConfig c = load_config(flags.config);
      report(run_config(c, context_for(flags, c)));
      return 0;
    }
    for (const auto& [cmd, kind] : experiments) {
      if (!cmd->parsed()) continue;
      const ExperimentConfig c = config_for(flags, kind);
      report(run_config(c, context_for(flags, c)));
    }
    return 0;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const CapabilityError& e) {
    std::cerr << "capability error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const IntegrationError& e) {
    std::cerr << "integration error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
