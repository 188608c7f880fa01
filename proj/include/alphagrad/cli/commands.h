// Copyright 2026 The alphagrad Authors
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

#ifndef ALPHAGRAD_CLI_COMMANDS_H_
#define ALPHAGRAD_CLI_COMMANDS_H_

#include <iosfwd>
#include <optional>
#include <string>

#include "alphagrad/cli/config.h"
#include "alphagrad/cli/csv.h"

namespace alphagrad::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitDiverged = 3;

// A table plus the exit code its command should report. Divergence keeps the
// partial table.
struct CommandOutput {
  ResultTable table;
  int exit_code = kExitOk;
  std::string message;
};

// estimate: one row per estimator, coded 0 = zobg, 1 = fobg, 2 = aobg
CommandOutput RunEstimate(const ExperimentConfig& config);
CommandOutput RunSweep(const ExperimentConfig& config);
CommandOutput RunOptimize(const ExperimentConfig& config);
CommandOutput RunLandscape(const ExperimentConfig& config);

CommandOutput RunCommand(const ExperimentConfig& config);

struct Invocation {
  std::string command;
  std::string config_path;
  std::optional<std::string> out_dir;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> plot_path;
};

// Reads the config, runs the command and writes <out>/<command>.csv (and
// <command>.svg with a plot spec). Returns the process exit code; messages
// go to err. Config errors leave no output files.
int Execute(const Invocation& invocation, std::ostream& err);

}  // namespace alphagrad::cli

#endif  // ALPHAGRAD_CLI_COMMANDS_H_
