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
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
  using namespace tvec::cli;
  CLI::App app{"Test vectors for trilinear forms on GL2(Q_p)"};
  app.require_subcommand(1);
  std::string config;
  std::string tensor;
  std::string case_id;
  std::string out_path;

  auto* lemmas = app.add_subcommand("verify-lemmas", "Lemma sweeps and structural identities");
  lemmas->add_option("--config", config, "JSON run configuration")->required();
  auto* eval = app.add_subcommand("eval-form", "Evaluate the trilinear form on one pure tensor");
  eval->add_option("--config", config, "JSON run configuration")->required();
  eval->add_option("--tensor", tensor, "a,b,c for gamma^a v1 (x) gamma^b v2 (x) gamma^c v3")
      ->required();
  auto* theorem = app.add_subcommand("verify-theorem", "Run a theorem driver");
  theorem->add_option("--config", config, "JSON run configuration")->required();
  theorem->add_option("--case", case_id, "case id")->required();
  auto* tree = app.add_subcommand("tree", "Draw oriented paths on the Bruhat-Tits tree");
  tree->add_option("--config", config, "JSON run configuration")->required();
  tree->add_option("--out", out_path, "DOT output file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kResourceError;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  const std::string argument = name == "eval-form"        ? tensor
                               : name == "verify-theorem" ? case_id
                               : name == "tree"           ? out_path
                                                          : "";
  CommandResult result;
  RunConfig cfg;
  try {
    cfg = load_config(config);
    result = run_command(name, cfg, argument);
  } catch (const ConfigError& e) {
    result = error_result(name, "config", e.what());
  }

  const std::string text = result.report.dump(2);
  if (cfg.report_path.empty()) {
    std::cout << text << "\n";
  } else {
    std::ofstream(cfg.report_path) << text << "\n";
    std::cerr << name << ": " << result.report.value("status", "error") << " ("
              << cfg.report_path << ")\n";
  }
  return result.exit_code;
}
