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

#include "nhqc/cli/config.hpp"

#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace nhqc::cli {

inline constexpr const char* kToolVersion = "1.0.0";

/// Fixed 12-significant-digit formatting used by every output file.
std::string format_number(double value);

using Cell = std::variant<std::string, double, long long>;

/// CSV file whose first line is a "# ..." comment header.
class CsvWriter {
 public:
  CsvWriter(const std::filesystem::path& path, const std::string& header, const std::vector<std::string>& columns);
  void row(const std::vector<Cell>& cells);
  std::size_t rows() const { return rows_; }

 private:
  std::ofstream out_;
  std::size_t columns_;
  std::size_t rows_ = 0;
};

/// Writes a JSON record with a leading "_header" key and numbers rounded
/// to 12 significant digits.
void write_json(const std::filesystem::path& path, const std::string& header, nlohmann::json record);

struct RunContext {
  std::filesystem::path out_dir = "out";
  std::size_t threads = 1;
  std::optional<double> step;
};

struct RunSummary {
  std::vector<std::filesystem::path> files;
  nlohmann::json record;
};

/// Runs one experiment and writes its outputs plus metadata.json into
/// context.out_dir.
RunSummary run_config(const ExperimentConfig& config, const RunContext& context);

/// ConfigError for an unknown preset name.
RunSummary run_preset(const std::string& name, const RunContext& context, bool joint = false);

}  // namespace nhqc::cli
