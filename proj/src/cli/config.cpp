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


#include "nhqc/cli/config.hpp"

#include "nhqc/core/errors.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <optional>
#include <set>
#include <sstream>

namespace nhqc::cli {

using nlohmann::json;
using core::kPi;

std::string to_string(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::Synthesize: return "synthesize";
    case ExperimentKind::Evolve: return "evolve";
    case ExperimentKind::Sweep: return "sweep";
    case ExperimentKind::Decoherence: return "decoherence";
    case ExperimentKind::Circuit: return "circuit";
    case ExperimentKind::Preset: return "preset";
  }
  return "unknown";
}

ExperimentKind kind_from_string(const std::string& name) {
  for (ExperimentKind k : {ExperimentKind::Synthesize, ExperimentKind::Evolve, ExperimentKind::Sweep,
                           ExperimentKind::Decoherence, ExperimentKind::Circuit, ExperimentKind::Preset}) {
    if (to_string(k) == name) return k;
  }
  throw ConfigError("unknown experiment kind '" + name + "'");
}

std::vector<double> Axis::values() const { return noise::linspace(min, max, points); }

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string hash_hex(std::uint64_t h) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

namespace {

const std::set<std::string> kStates = {"0", "1", "plus", "minus", "plus_i", "minus_i"};

double to_ghz(double angular) { return angular / (2.0 * kPi); }

// One JSON object being consumed; keys never taken are reported as unknown.
class Section {
 public:
  Section(const json& node, std::string path, const std::string& source)
      : node_(node), path_(std::move(path)), source_(source) {
    if (!node_.is_object()) fail(path_.empty() ? "/" : path_, "expected an object");
  }

  bool has(const std::string& key) const { return node_.contains(key); }

  std::optional<double> number(const std::string& key) {
    const json* v = take(key);
    if (!v) return std::nullopt;
    if (!v->is_number()) fail(key_path(key), "expected a number");
    const double x = v->get<double>();
    if (!std::isfinite(x)) fail(key_path(key), "expected a finite number");
    return x;
  }

  std::optional<std::string> string(const std::string& key) {
    const json* v = take(key);
    if (!v) return std::nullopt;
    if (!v->is_string()) fail(key_path(key), "expected a string");
    return v->get<std::string>();
  }

  std::optional<bool> boolean(const std::string& key) {
    const json* v = take(key);
    if (!v) return std::nullopt;
    if (!v->is_boolean()) fail(key_path(key), "expected true or false");
    return v->get<bool>();
  }

  std::optional<std::uint64_t> count(const std::string& key) {
    const json* v = take(key);
    if (!v) return std::nullopt;
    if (!v->is_number_integer() || v->get<long long>() < 0) fail(key_path(key), "expected a non-negative integer");
    return v->get<std::uint64_t>();
  }

  std::optional<Section> object(const std::string& key) {
    const json* v = take(key);
    if (!v) return std::nullopt;
    return Section(*v, key_path(key), source_);
  }

  void finish() const {
    for (const auto& item : node_.items()) {
      if (!used_.count(item.key())) fail(key_path(item.key()), "unknown key");
    }
  }

  [[noreturn]] void fail(const std::string& key, const std::string& what) const {
    throw ConfigError(source_ + ": key '" + key + "': " + what);
  }

  std::string key_path(const std::string& key) const { return path_ + "/" + key; }

 private:
  const json* take(const std::string& key) {
    used_.insert(key);
    auto it = node_.find(key);
    return it == node_.end() ? nullptr : &*it;
  }

  const json& node_;
  std::string path_;
  const std::string& source_;
  std::set<std::string> used_;
};

void read_axis(Section& parent, const std::string& key, Axis& axis) {
  auto s = parent.object(key);
  if (!s) return;
  if (auto v = s->number("min")) axis.min = *v;
  if (auto v = s->number("max")) axis.max = *v;
  if (auto v = s->count("points")) axis.points = static_cast<std::size_t>(*v);
  s->finish();
}

void read_gate(Section& parent, synthesis::GateSpec& gate) {
  auto s = parent.object("gate");
  if (!s) return;
  const bool named = s->has("rotation") || s->has("angle_over_pi");
  const bool explicit_form = s->has("gamma_over_pi") || s->has("theta_over_pi") || s->has("phi_over_pi");
  if (named && explicit_form) {
    s->fail(s->key_path("rotation"), "use either rotation/angle_over_pi or gamma/theta/phi_over_pi, not both");
  }
  if (named) {
    const std::string axis = s->string("rotation").value_or("x");
    const double angle = s->number("angle_over_pi").value_or(0.5) * kPi;
    if (axis == "x") {
      gate = synthesis::GateSpec::rx(angle);
    } else if (axis == "y") {
      gate = synthesis::GateSpec::ry(angle);
    } else if (axis == "z") {
      gate = synthesis::GateSpec::rz(angle);
    } else {
      s->fail(s->key_path("rotation"), "expected \"x\", \"y\" or \"z\"");
    }
  } else {
    if (auto v = s->number("gamma_over_pi")) gate.gamma = *v * kPi;
    if (auto v = s->number("theta_over_pi")) gate.theta = *v * kPi;
    if (auto v = s->number("phi_over_pi")) gate.phi = *v * kPi;
  }
  s->finish();
}

void read_noise(Section& parent, noise::NoiseModel& model) {
  auto s = parent.object("noise");
  if (!s) return;
  if (s->has("kappa") && (s->has("gamma_minus") || s->has("gamma_z"))) {
    s->fail(s->key_path("kappa"), "use either kappa or gamma_minus/gamma_z, not both");
  }
  if (auto v = s->number("kappa")) model = noise::NoiseModel::uniform(*v);
  if (auto v = s->number("gamma_minus")) model.gamma_minus = *v;
  if (auto v = s->number("gamma_z")) model.gamma_z = *v;
  s->finish();
}

void read_lattice(Section& parent, transmon::LatticeConfig& cfg) {
  auto s = parent.object("lattice");
  if (!s) return;
  auto set_ghz = [&](const char* key, double& field) {
    if (auto v = s->number(key)) field = transmon::ghz(*v);
  };
  set_ghz("omega_q1", cfg.t1.omega_q);
  set_ghz("omega_qa", cfg.ta.omega_q);
  set_ghz("omega_q2", cfg.t2.omega_q);
  set_ghz("omega_q3", cfg.t3.omega_q);
  if (auto v = s->number("alpha")) cfg.t1.alpha = cfg.ta.alpha = cfg.t2.alpha = cfg.t3.alpha = transmon::ghz(*v);
  set_ghz("alpha1", cfg.t1.alpha);
  set_ghz("alpha_a", cfg.ta.alpha);
  set_ghz("alpha2", cfg.t2.alpha);
  set_ghz("alpha3", cfg.t3.alpha);
  set_ghz("g1a", cfg.g1a);
  set_ghz("ga2", cfg.ga2);
  set_ghz("g12", cfg.g12);
  set_ghz("g23", cfg.g23);
  set_ghz("drive_omega", cfg.omega);
  if (auto v = s->number("beta3")) cfg.beta3 = *v;
  s->finish();
}

void read_circuit(Section& parent, ExperimentConfig& c) {
  auto s = parent.object("circuit");
  if (!s) return;
  if (auto v = s->string("target")) {
    if (*v == "logical") {
      c.circuit_target = CircuitTarget::Logical;
    } else if (*v == "pair") {
      c.circuit_target = CircuitTarget::Pair;
    } else {
      s->fail(s->key_path("target"), "expected \"logical\" or \"pair\"");
    }
  }
  if (auto v = s->number("gamma_prime_over_pi")) c.gamma_prime_over_pi = *v;
  if (auto v = s->number("delta3_over_g")) c.delta3_over_g = *v;
  s->finish();
}

ExperimentConfig from_json(const json& doc, const std::string& source) {
  ExperimentConfig c;
  Section root(doc, "", source);
  if (auto v = root.string("kind")) {
    try {
      c.kind = kind_from_string(*v);
    } catch (const ConfigError& e) {
      root.fail("/kind", e.what());
    }
  }
  read_gate(root, c.gate);
  if (auto v = root.string("scheme")) c.scheme = *v;
  if (auto v = root.number("delta2_over_omega")) c.delta2_over_omega = *v;
  read_axis(root, "delta_grid", c.delta_grid);
  read_axis(root, "epsilon_grid", c.epsilon_grid);
  read_axis(root, "kappa_grid", c.kappa_grid);
  read_noise(root, c.noise);
  if (auto v = root.string("initial_state")) c.initial_state = *v;
  if (auto v = root.count("samples")) c.samples = static_cast<int>(std::min<std::uint64_t>(*v, 10'000'000));
  read_circuit(root, c);
  read_lattice(root, c.lattice);
  if (auto v = root.string("preset")) c.preset = *v;
  if (auto v = root.boolean("joint")) c.joint = *v;
  if (auto v = root.string("output")) c.output = *v;
  if (auto v = root.count("seed")) c.seed = *v;
  root.finish();
  return c;
}

json axis_json(const Axis& a) { return {{"min", a.min}, {"max", a.max}, {"points", a.points}}; }

}  // namespace

void ExperimentConfig::validate() const {
  auto fail = [](const std::string& key, const std::string& what) {
    throw ConfigError("invalid config: key '" + key + "': " + what);
  };
  try {
    gate.validate();
  } catch (const std::exception& e) {
    fail("/gate", e.what());
  }
  if (scheme == "all") {
    if (kind != ExperimentKind::Sweep && kind != ExperimentKind::Decoherence) {
      fail("/scheme", "\"all\" is only valid for sweep and decoherence");
    }
  } else {
    try {
      synthesis::scheme_from_string(scheme);
    } catch (const std::exception& e) {
      fail("/scheme", e.what());
    }
  }
  if (!std::isfinite(delta2_over_omega)) fail("/delta2_over_omega", "must be finite");
  for (const auto& [name, axis] : {std::pair{"/delta_grid", &delta_grid}, std::pair{"/epsilon_grid", &epsilon_grid},
                                   std::pair{"/kappa_grid", &kappa_grid}}) {
    if (axis->points < 1) fail(name, "points must be at least 1");
    if (axis->points > 100000) fail(name, "points must be at most 100000");
    if (!(axis->min <= axis->max)) fail(name, "min must not exceed max");
  }
  if (kappa_grid.min < 0.0) fail("/kappa_grid", "decoherence rates must be non-negative");
  if (!(noise.gamma_minus >= 0.0)) fail("/noise/gamma_minus", "must be non-negative");
  if (!(noise.gamma_z >= 0.0)) fail("/noise/gamma_z", "must be non-negative");
  if (!kStates.count(initial_state)) fail("/initial_state", "expected one of 0, 1, plus, minus, plus_i, minus_i");
  if (samples < 1) fail("/samples", "must be at least 1");
  if (!(gamma_prime_over_pi > 0.0 && gamma_prime_over_pi < 2.0)) fail("/circuit/gamma_prime_over_pi", "must lie in (0, 2)");
  try {
    lattice.validate();
  } catch (const std::exception& e) {
    fail("/lattice", e.what());
  }
  if (kind == ExperimentKind::Preset) {
    if (std::find(kPresetNames.begin(), kPresetNames.end(), preset) == kPresetNames.end()) {
      fail("/preset", "unknown preset '" + preset + "' (expected fig2, fig3, fig4, fig5 or table-accel)");
    }
  }
  if (output.empty()) fail("/output", "must not be empty");
}

json ExperimentConfig::to_json() const {
  const auto& l = lattice;
  return {
      {"kind", cli::to_string(kind)},
      {"gate", {{"gamma_over_pi", gate.gamma / kPi}, {"theta_over_pi", gate.theta / kPi}, {"phi_over_pi", gate.phi / kPi}}},
      {"scheme", scheme},
      {"delta2_over_omega", delta2_over_omega},
      {"delta_grid", axis_json(delta_grid)},
      {"epsilon_grid", axis_json(epsilon_grid)},
      {"kappa_grid", axis_json(kappa_grid)},
      {"noise", {{"gamma_minus", noise.gamma_minus}, {"gamma_z", noise.gamma_z}}},
      {"initial_state", initial_state},
      {"samples", samples},
      {"circuit",
       {{"target", circuit_target == CircuitTarget::Logical ? "logical" : "pair"},
        {"gamma_prime_over_pi", gamma_prime_over_pi},
        {"delta3_over_g", delta3_over_g}}},
      {"lattice",
       {{"omega_q1", to_ghz(l.t1.omega_q)}, {"omega_qa", to_ghz(l.ta.omega_q)}, {"omega_q2", to_ghz(l.t2.omega_q)},
        {"omega_q3", to_ghz(l.t3.omega_q)}, {"alpha1", to_ghz(l.t1.alpha)}, {"alpha_a", to_ghz(l.ta.alpha)},
        {"alpha2", to_ghz(l.t2.alpha)}, {"alpha3", to_ghz(l.t3.alpha)}, {"g1a", to_ghz(l.g1a)},
        {"ga2", to_ghz(l.ga2)}, {"g12", to_ghz(l.g12)}, {"g23", to_ghz(l.g23)},
        {"drive_omega", to_ghz(l.omega)}, {"beta3", l.beta3}}},
      {"preset", preset},
      {"joint", joint},
      {"output", output},
      {"seed", seed},
  };
}

std::uint64_t ExperimentConfig::hash() const {
  json echo = to_json();
  echo.erase("output");
  return fnv1a(echo.dump());
}

ExperimentConfig parse_config(const std::string& text, const std::string& source) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(end), '\n');
    const auto last_nl = text.rfind('\n', end == 0 ? 0 : end - 1);
    const std::size_t column = last_nl == std::string::npos || end == 0 ? end + 1 : end - last_nl;
    std::ostringstream os;
    os << source << ":" << line << ":" << column << ": parse error: " << e.what();
    throw ConfigError(os.str());
  }
  ExperimentConfig c = from_json(doc, source);
  c.validate();
  return c;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path.string() + ": cannot open config file");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str(), path.string());
}

core::StateVector initial_state_vector(const std::string& name) {
  const double r = 1.0 / std::sqrt(2.0);
  core::StateVector v = core::StateVector::Zero(2);
  if (name == "0") {
    v(0) = 1.0;
  } else if (name == "1") {
    v(1) = 1.0;
  } else if (name == "plus") {
    v << r, r;
  } else if (name == "minus") {
    v << r, -r;
  } else if (name == "plus_i") {
    v << r, core::kI * r;
  } else if (name == "minus_i") {
    v << r, -core::kI * r;
  } else {
    throw ConfigError("unknown initial state '" + name + "'");
  }
  return v;
}

}  // namespace nhqc::cli
