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

#include <string>

#include <json.hpp>

#include "run_config.hpp"

namespace tvec::cli {

// Stable exit codes.
enum ExitCode : int { kPass = 0, kCheckFailed = 1, kResourceError = 2 };

struct CommandResult {
  int exit_code = kPass;
  nlohmann::json report;
};

// Lemma sweeps and structural identities at the configured prime.
CommandResult cmd_verify_lemmas(const RunConfig& cfg);

// tensor is "a,b,c": gamma^a v1* (x) gamma^b v2* (x) gamma^c v3.
CommandResult cmd_eval_form(const RunConfig& cfg, const std::string& tensor);

CommandResult cmd_verify_theorem(const RunConfig& cfg, const std::string& case_id);

// Writes the DOT text to out_path; the report carries the covering verdict.
CommandResult cmd_tree(const RunConfig& cfg, const std::string& out_path);

// Runs one of the commands above, turning library and configuration errors
// into exit code 2 and stamping the common report fields.
CommandResult run_command(const std::string& name, const RunConfig& cfg,
                          const std::string& argument);

// For errors raised before a configuration exists.
CommandResult error_result(const std::string& command, const std::string& kind,
                           const std::string& message);

}  // namespace tvec::cli
