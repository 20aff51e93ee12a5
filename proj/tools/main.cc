//
// Copyright 2026 The PACA Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "commands.h"
#include "paca/errors.h"
#include "paca/version.h"

namespace {

// Exit codes: 0 success, 2 config error, 3 precondition/state error.
constexpr int kExitConfig = 2;
constexpr int kExitState = 3;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"paca: privacy-preserving average consensus - simulation, "
               "optimal estimation, and disclosure-probability analysis"};
  app.set_version_flag("--version", paca::kToolVersion);
  app.fallthrough(true);
  app.require_subcommand(1);

  std::string config_path;
  std::string seed_override;
  std::string output_override;
  std::string format_override;
  app.add_option("-c,--config", config_path, "experiment config file")
      ->required();
  app.add_option("--seed", seed_override, "override the config seed");
  app.add_option("--output", output_override, "override output.path");
  app.add_option("--format", format_override, "override output.format");

  auto* delta = app.add_subcommand(
      "delta", "analytic and Monte Carlo disclosure probabilities");
  auto* simulate =
      app.add_subcommand("simulate", "run the consensus and write a trace");
  auto* estimate = app.add_subcommand(
      "estimate", "optimal initial-state estimate from a trace");
  auto* attack = app.add_subcommand(
      "attack", "full-knowledge perfect-inference attack");
  auto* sweep = app.add_subcommand(
      "sweep", "delta vs eps sweep across noise families");
  auto* compare = app.add_subcommand(
      "compare", "fixed-variance noise family comparison");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    paca::tools::Config config =
        paca::tools::Config::FromFile(config_path);
    if (!seed_override.empty()) config.Set("seed", seed_override);
    if (!output_override.empty()) config.Set("output.path", output_override);
    if (!format_override.empty()) {
      config.Set("output.format", format_override);
    }

    if (delta->parsed()) {
      paca::tools::CmdDelta(config, std::cout);
    } else if (simulate->parsed()) {
      paca::tools::CmdSimulate(config, std::cout);
    } else if (estimate->parsed()) {
      paca::tools::CmdEstimate(config, std::cout);
    } else if (attack->parsed()) {
      paca::tools::CmdAttack(config, std::cout);
    } else if (sweep->parsed()) {
      paca::tools::CmdSweep(config, std::cout);
    } else if (compare->parsed()) {
      paca::tools::CmdCompare(config, std::cout);
    }
    return 0;
  } catch (const paca::tools::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const paca::StateError& e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return kExitState;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
