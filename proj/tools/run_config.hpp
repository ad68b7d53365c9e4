// Copyright 2026 The tvec Authors
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

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tvec/rep_spec.hpp"

namespace tvec::cli {

inline constexpr const char* kReportSchema = "tvec.report/1";

// Thrown for malformed or out-of-range configuration documents.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PathSpec {
  int n = 0;
  int offset = 0;  // gamma^offset applied to the standard path
};

struct RunConfig {
  int p = 2;
  int N = 6;
  i64 budget = 4'000'000;
  double tolerance = 1e-9;
  int radius = 10;  // level cap for induced vectors
  std::uint64_t seed = 1;
  std::vector<RepSpec> specs;  // zero or three
  // Reducible factors passed as special_subspace(eta) and read as the full
  // induced representation.
  int spherical = 0;
  double alpha_fault = 1.0;
  bool verify_h = true;
  bool cross_check_kernel = true;
  std::vector<PathSpec> paths;
  std::string report_path;  // empty: stdout
  nlohmann::json source;
};

RunConfig parse_config(const nlohmann::json& doc);
RunConfig load_config(const std::string& path);

MultChar parse_char(int p, const nlohmann::json& j);
RepSpec parse_rep(int p, const nlohmann::json& j);

std::array<RepSpec, 3> triple(const RunConfig& cfg);

}  // namespace tvec::cli
