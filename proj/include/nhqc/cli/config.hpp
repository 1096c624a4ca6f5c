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

#include "nhqc/noise/noise_robustness.hpp"
#include "nhqc/synthesis/gate_synthesis.hpp"
#include "nhqc/transmon/transmon_circuit.hpp"

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace nhqc::cli {

/// Malformed or invalid configuration document. The message names the
/// source, and the line/column or the offending key.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ExperimentKind { Synthesize, Evolve, Sweep, Decoherence, Circuit, Preset };

std::string to_string(ExperimentKind kind);
ExperimentKind kind_from_string(const std::string& name);

inline const std::vector<std::string> kPresetNames = {"fig2", "fig3", "fig4", "fig5", "table-accel"};

enum class CircuitTarget { Logical, Pair };

struct Axis {
  double min = 0.0;
  double max = 0.0;
  std::size_t points = 1;

  std::vector<double> values() const;
};

/// Abstract experiments work in units of Omega (Omega = 1); lattice values
/// are read in GHz and stored as angular frequencies in rad/ns.
struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::Synthesize;
  synthesis::GateSpec gate = synthesis::GateSpec::rx(core::kPi / 2.0);
  /// A scheme name, or "all" for sweep and decoherence.
  std::string scheme = "ours";
  double delta2_over_omega = -0.5;
  Axis delta_grid{-0.1, 0.1, 41};
  Axis epsilon_grid{-0.1, 0.1, 41};
  Axis kappa_grid{0.0, 1e-3, 11};
  noise::NoiseModel noise{4e-4, 4e-4};
  /// "0", "1", "plus", "minus", "plus_i" or "minus_i".
  std::string initial_state = "0";
  int samples = 200;
  CircuitTarget circuit_target = CircuitTarget::Logical;
  double gamma_prime_over_pi = 1.0;
  double delta3_over_g = 0.0;
  transmon::LatticeConfig lattice = transmon::LatticeConfig::default_lattice();
  std::string preset;
  bool joint = false;
  std::string output = "out";
  std::uint64_t seed = 0;

  /// ConfigError naming the offending field.
  void validate() const;
  /// Canonical echo, in the same units as the input document.
  nlohmann::json to_json() const;
  /// FNV-1a over the canonical echo without the output location.
  std::uint64_t hash() const;
};

std::string hash_hex(std::uint64_t h);
std::uint64_t fnv1a(const std::string& text);

/// Parses and validates a configuration document. Unknown keys are rejected.
ExperimentConfig parse_config(const std::string& text, const std::string& source = "<config>");
ExperimentConfig load_config(const std::filesystem::path& path);

core::StateVector initial_state_vector(const std::string& name);

}  // namespace nhqc::cli
