// Copyright 2026 The Loschmidt Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#ifndef LOSCHMIDT_TOOLS_CLI_RUNNER_HPP
#define LOSCHMIDT_TOOLS_CLI_RUNNER_HPP

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "loschmidt/essential_states.hpp"
#include "loschmidt/trace.hpp"

namespace loschmidt::cli {

/// Bad flags or parameters outside a module precondition (exit code 2).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// --help was given; what() holds the rendered help text (exit code 0).
class HelpRequested : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class OutputFormat { csv, json };

struct ExperimentConfig {
  std::string subcommand;

  // tfim-ed / tfim-ff / thermo
  int sites = 12;
  double g0 = 0.5;
  double gf = 2.0;
  double jf = 1.0;
  Boundary boundary = Boundary::periodic;
  InitialState initial = InitialState::even_ground;
  bool krylov = false;
  int krylov_dim = 24;
  double krylov_step = 0.1;
  int nodes = 64;
  double tolerance = 1e-8;
  int n_critical = 5;

  // rabi
  double splitting = 2.0;
  double weight = 0.5;
  int rabi_sites = 1;

  // ladder
  int levels = 8;
  double spacing = 1.0;

  // bose-site
  double nbar = 2.0;
  double interaction = 1.0;

  // scars (seed comes from the common flag)
  ScarSpec scar;

  double curvature_threshold = 10.0;
  TimeGrid grid{0.0, 10.0, 2001};
  std::string output_dir = "runs";
  std::string run_name;  // empty: <subcommand>-<timestamp>
  std::uint64_t seed = 1;
  OutputFormat format = OutputFormat::csv;
  int threads = 0;  // 0: LOSCHMIDT_THREADS or all cores

  nlohmann::json to_json() const;
};

/// Flags -> validated config. A --config file (TOML or INI) supplies values
/// that explicit flags override.
ExperimentConfig parse_config(const std::vector<std::string>& args);

struct OracleCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct RunManifest {
  nlohmann::json config;
  std::string version;
  double wall_seconds = 0.0;
  std::filesystem::path directory;
  std::vector<std::string> files;  // relative to directory
  std::vector<OracleCheck> checks;
  nlohmann::json extra;  // per-subcommand diagnostics

  bool all_passed() const;
  nlohmann::json to_json() const;
};

/// Runs one experiment, writing data files and manifest.json into a fresh
/// run directory. Progress and tables go to `log`.
RunManifest run(const ExperimentConfig& config, std::ostream& log);

/// Full command-line entry point; returns the process exit code
/// (0 success, 1 runtime failure, 2 usage error).
int run_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace loschmidt::cli

#endif  // LOSCHMIDT_TOOLS_CLI_RUNNER_HPP
