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

#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

using namespace nhqc;
using namespace nhqc::cli;
using core::kPi;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("nhqc_cli_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<std::string> lines(const fs::path& p) {
  std::ifstream in(p);
  std::vector<std::string> out;
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string cell; std::getline(ss, cell, ',');) out.push_back(cell);
  return out;
}

std::string error_of(const std::string& text) {
  try {
    parse_config(text, "cfg.json");
  } catch (const ConfigError& e) {
    return e.what();
  }
  return "";
}

int run_tool(const std::string& args) {
  const std::string cmd = std::string(NHQC_TOOL_PATH) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST(Config, DefaultsAndGateForms) {
  const ExperimentConfig a = parse_config("{}");
  EXPECT_EQ(a.kind, ExperimentKind::Synthesize);
  EXPECT_DOUBLE_EQ(a.delta2_over_omega, -0.5);
  const ExperimentConfig b = parse_config(R"({"gate": {"rotation": "z", "angle_over_pi": 0.25}})");
  EXPECT_DOUBLE_EQ(b.gate.gamma, kPi / 4.0);
  EXPECT_DOUBLE_EQ(b.gate.theta, kPi);
  const ExperimentConfig c =
      parse_config(R"({"gate": {"gamma_over_pi": 1.5, "theta_over_pi": 0.25, "phi_over_pi": 0.1}})");
  EXPECT_DOUBLE_EQ(c.gate.gamma, 1.5 * kPi);
  EXPECT_DOUBLE_EQ(c.gate.phi, 0.1 * kPi);
}

TEST(Config, LatticeInGigahertz) {
  const ExperimentConfig c = parse_config(R"({"lattice": {"omega_q3": 3.5, "alpha": 0.2, "beta3": 0.3}})");
  EXPECT_DOUBLE_EQ(c.lattice.t3.omega_q, 2.0 * kPi * 3.5);
  EXPECT_DOUBLE_EQ(c.lattice.ta.alpha, 2.0 * kPi * 0.2);
  EXPECT_DOUBLE_EQ(c.lattice.beta3, 0.3);
  EXPECT_NEAR(c.to_json()["lattice"]["omega_q3"].get<double>(), 3.5, 1e-15);
}

TEST(Config, UnknownKeysRejectedWithPath) {
  EXPECT_NE(error_of(R"({"gate": {"rotation": "x", "angel": 1}})").find("'/gate/angel': unknown key"), std::string::npos);
  EXPECT_NE(error_of(R"({"sweep_points": 3})").find("'/sweep_points'"), std::string::npos);
}

TEST(Config, ParseErrorReportsLineAndColumn) {
  const std::string msg = error_of("{\n  \"kind\": \"sweep\",\n  \"scheme\": ours\n}");
  EXPECT_NE(msg.find("cfg.json:3:"), std::string::npos) << msg;
}

TEST(Config, TypeAndValueErrorsNameTheField) {
  EXPECT_NE(error_of(R"({"delta2_over_omega": "big"})").find("'/delta2_over_omega': expected a number"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"kappa_grid": {"points": -1}})").find("'/kappa_grid/points'"), std::string::npos);
  EXPECT_NE(error_of(R"({"scheme": "all"})").find("'/scheme'"), std::string::npos);
  EXPECT_NE(error_of(R"({"gate": {"gamma_over_pi": 2.5}})").find("'/gate'"), std::string::npos);
  EXPECT_NE(error_of(R"({"kind": "preset", "preset": "fig9"})").find("'/preset'"), std::string::npos);
  EXPECT_NE(error_of(R"({"kind": "plot"})").find("'/kind'"), std::string::npos);
  EXPECT_NE(error_of(R"({"noise": {"kappa": -1}})").find("'/noise/gamma_minus'"), std::string::npos);
  EXPECT_NE(error_of(R"({"initial_state": "2"})").find("'/initial_state'"), std::string::npos);
  EXPECT_NO_THROW(parse_config(R"({"kind": "sweep", "scheme": "all"})"));
}

TEST(Config, HashIgnoresOutputOnly) {
  const auto a = parse_config(R"({"output": "x"})");
  const auto b = parse_config(R"({"output": "y"})");
  const auto c = parse_config(R"({"delta2_over_omega": -0.25})");
  EXPECT_EQ(a.hash(), b.hash());
  EXPECT_NE(a.hash(), c.hash());
  EXPECT_EQ(fnv1a(""), 14695981039346656037ULL);
  EXPECT_EQ(hash_hex(fnv1a("a")), "af63dc4c8601ec8c");
}

TEST(Formatting, TwelveSignificantDigits) {
  EXPECT_EQ(format_number(kPi), "3.14159265359");
  EXPECT_EQ(format_number(0.0), "0");
  EXPECT_EQ(format_number(-0.0), "0");
  EXPECT_EQ(format_number(1e-20), "1e-20");
  EXPECT_EQ(format_number(0.6), "0.6");
}

TEST(RunConfig, SynthesizeRecord) {
  const fs::path dir = scratch("synth");
  const auto c = parse_config(R"({"gate": {"rotation": "x", "angle_over_pi": 0.5}, "delta2_over_omega": -0.5})");
  const RunSummary s = run_config(c, {dir, 1, {}});
  const auto record = nlohmann::json::parse(slurp(dir / "synthesize.json"));
  EXPECT_NEAR(record["eta"].get<double>(), -5.0 / 6.0, 1e-11);
  EXPECT_NEAR(record["tau"].get<double>(), 1.2 * kPi, 1e-11);
  EXPECT_EQ(record["_header"].get<std::string>().rfind("nhqc synthesize config=", 0), 0U);
  const auto meta = nlohmann::json::parse(slurp(dir / "metadata.json"));
  EXPECT_EQ(meta["version"], kToolVersion);
  EXPECT_EQ(meta["config"], c.to_json());
  EXPECT_TRUE(meta.contains("wall_time_seconds"));
  EXPECT_EQ(s.files.size(), 2U);
}

TEST(RunConfig, EvolveWithoutNoiseIsExact) {
  const fs::path dir = scratch("evolve");
  const auto c = parse_config(R"({"kind": "evolve", "noise": {"kappa": 0}, "initial_state": "plus", "samples": 50})");
  run_config(c, {dir, 1, {}});
  const auto record = nlohmann::json::parse(slurp(dir / "evolve.json"));
  EXPECT_NEAR(record["final_fidelity"].get<double>(), 1.0, 1e-8);
  const auto rows = lines(dir / "evolve.csv");
  ASSERT_EQ(rows.size(), 2U + 51U);
  EXPECT_EQ(rows[1], "t,p0,p1,p2,fidelity");
  EXPECT_EQ(lines(dir / "bloch.csv")[1], "t,x,y,z,leakage");
  EXPECT_EQ(lines(dir / "bloch.csv").size(), 2U + 51U);
}

TEST(RunConfig, SweepRowCount) {
  const fs::path dir = scratch("sweep");
  const auto c = parse_config(R"({"kind": "sweep"})");
  run_config(c, {dir, 4, {}});
  const auto rows = lines(dir / "sweep.csv");
  ASSERT_EQ(rows.size(), 2U + 1681U);
  EXPECT_EQ(rows[0].rfind("# nhqc sweep config=", 0), 0U);
  EXPECT_EQ(rows[1],
            "scheme,gamma,theta,phi,delta,epsilon,kappa,tau_over_tauc,fidelity,fidelity_diff_vs_single_loop,"
            "fidelity_diff_vs_toc");
  // Cell (0, 0) of the grid sits at index 20 * 41 + 20.
  const auto center = split(rows[2 + 20 * 41 + 20]);
  EXPECT_EQ(center[0], "ours");
  EXPECT_EQ(center[4], "0");
  EXPECT_NEAR(std::stod(center[8]), 1.0, 1e-9);
}

TEST(RunConfig, DecoherenceAllSchemes) {
  const fs::path dir = scratch("decoherence");
  const auto c = parse_config(R"({"kind": "decoherence", "scheme": "all", "kappa_grid": {"min": 0, "max": 1e-3, "points": 3}})");
  run_config(c, {dir, 2, {}});
  EXPECT_EQ(lines(dir / "decoherence.csv").size(), 2U + 9U);
}

TEST(RunConfig, CircuitCapabilityErrorSurfaces) {
  const fs::path dir = scratch("circuit");
  const auto c = parse_config(R"({"kind": "circuit", "delta2_over_omega": 0, "lattice": {"drive_omega": 0.2}})");
  EXPECT_THROW(run_config(c, {dir, 1, {}}), CapabilityError);
}

TEST(RunConfig, PairCircuitRecord) {
  const fs::path dir = scratch("pair");
  const auto c = parse_config(R"({"kind": "circuit", "circuit": {"target": "pair", "gamma_prime_over_pi": 1}})");
  run_config(c, {dir, 1, {}});
  const auto record = nlohmann::json::parse(slurp(dir / "circuit.json"));
  EXPECT_GT(record["fidelity"].get<double>(), 0.99);
}

TEST(RunConfig, UnwritableOutputIsConfigError) {
  const fs::path dir = scratch("unwritable");
  std::ofstream(dir / "file") << "x";
  EXPECT_THROW(run_config(parse_config("{}"), {dir / "file" / "sub", 1, {}}), ConfigError);
}

TEST(Presets, Fig2RowAndDeterminism) {
  const fs::path a = scratch("fig2a");
  const fs::path b = scratch("fig2b");
  run_preset("fig2", {a, 1, {}});
  run_preset("fig2", {b, 1, {}});
  EXPECT_EQ(slurp(a / "fig2.csv"), slurp(b / "fig2.csv"));
  bool found = false;
  for (const auto& row : lines(a / "fig2.csv")) {
    const auto cells = split(row);
    if (cells.size() == 5 && cells[0] == "0" && cells[1] == "0.5") {
      EXPECT_NEAR(std::stod(cells[4]), 0.8660, 1e-4);
      found = true;
    }
  }
  EXPECT_TRUE(found);
  EXPECT_EQ(lines(a / "fig2.csv").size(), 2U + 7U * 199U);
}

TEST(Presets, Fig4FinalFidelity) {
  const fs::path dir = scratch("fig4");
  run_preset("fig4", {dir, 1, {}});
  const auto rows = lines(dir / "fig4_final.csv");
  ASSERT_EQ(rows.size(), 4U);
  EXPECT_NEAR(std::stod(split(rows[2])[3]), 0.9992, 1e-3);
  EXPECT_NEAR(std::stod(split(rows[3])[3]), 0.9990, 1e-3);
}

TEST(Presets, EveryOutputHasHeaderAndIsDeterministic) {
  for (const auto& name : kPresetNames) {
    const fs::path a = scratch("preset_a_" + name);
    const fs::path b = scratch("preset_b_" + name);
    const auto sa = run_preset(name, {a, 2, {}});
    run_preset(name, {b, 3, {}});
    for (const auto& f : sa.files) {
      const std::string text = slurp(f);
      if (f.extension() == ".csv") {
        EXPECT_EQ(text.rfind("# nhqc preset=" + name + " config=", 0), 0U) << f;
        EXPECT_EQ(text, slurp(b / f.filename())) << f;
      } else {
        EXPECT_NE(text.find("\"_header\": \"nhqc preset=" + name), std::string::npos) << f;
      }
    }
  }
  EXPECT_THROW(run_preset("fig9", {scratch("fig9"), 1, {}}), ConfigError);
}

TEST(Presets, Fig3PanelsAndJointFlag) {
  const fs::path dir = scratch("fig3");
  const auto s = run_preset("fig3", {dir, 4, {}}, true);
  EXPECT_EQ(lines(dir / "fig3_delta.csv").size(), 2U + 3U * 3U * 41U);
  EXPECT_EQ(lines(dir / "fig3_epsilon.csv").size(), 2U + 3U * 3U * 41U);
  EXPECT_EQ(lines(dir / "fig3_joint.csv").size(), 2U + 3U * 3U * 1681U);
}

TEST(Tool, ExitCodes) {
  const fs::path dir = scratch("tool");
  std::ofstream(dir / "bad.json") << R"({"gate": {"angel": 1}})";
  std::ofstream(dir / "ok.json") << R"({"kind": "synthesize"})";
  std::ofstream(dir / "cap.json") << R"({"kind": "circuit", "delta2_over_omega": 0, "lattice": {"drive_omega": 0.2}})";
  EXPECT_EQ(run_tool("validate " + (dir / "ok.json").string()), 0);
  EXPECT_EQ(run_tool("validate " + (dir / "bad.json").string()), 2);
  EXPECT_EQ(run_tool("synthesize --config " + (dir / "ok.json").string() + " --out " + (dir / "o").string()), 0);
  EXPECT_EQ(run_tool("sweep --config " + (dir / "ok.json").string() + " --out " + (dir / "o").string()), 2);
  EXPECT_EQ(run_tool("run --config " + (dir / "cap.json").string() + " --out " + (dir / "o").string()), 3);
  EXPECT_EQ(run_tool("preset fig9 --out " + (dir / "o").string()), 2);
  EXPECT_EQ(run_tool("synthesize --threads 0"), 2);
  EXPECT_TRUE(fs::exists(dir / "o" / "synthesize.json"));
}
