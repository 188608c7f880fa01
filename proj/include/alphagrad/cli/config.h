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

#ifndef ALPHAGRAD_CLI_CONFIG_H_
#define ALPHAGRAD_CLI_CONFIG_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "alphagrad/envs/registry.h"
#include "alphagrad/optimize.h"
#include "alphagrad/types.h"

namespace alphagrad::cli {

struct EstimatorSettings {
  std::optional<int> num_samples;  // env default when absent
  std::optional<double> sigma;
  std::optional<double> gamma;
  double delta = 0.05;
  std::optional<double> R;
  bool use_baseline = true;
};

struct OptimizerSettings {
  std::string estimator = "aobg";
  int steps = 100;
  std::optional<double> learning_rate;
  std::optional<std::vector<double>> theta0;
  int eval_samples = 1000;
  std::optional<std::uint64_t> eval_seed;  // run seed when absent
};

struct SweepSettings {
  // an env parameter key, or "sigma" / "N" for estimator settings
  std::string parameter;
  std::vector<double> grid;
  int zero_batch_size = 4;
};

struct LandscapeSettings {
  std::vector<int> coords{0};
  std::vector<double> lo;
  std::vector<double> hi;
  int points = 61;
  std::optional<int> num_samples;  // estimator N when absent
};

struct ExperimentConfig {
  std::string command;
  std::string env_name;
  nlohmann::json env_params = nlohmann::json::object();
  std::optional<std::vector<double>> theta;
  std::optional<std::vector<double>> x1;
  EstimatorSettings estimator;
  OptimizerSettings optimizer;
  SweepSettings sweep;
  LandscapeSettings landscape;
  std::uint64_t seed = 0;
  std::string output_dir = ".";
};

// Parses and validates a config document. Errors are ConfigError with the
// message prefixed by "line N: " where the offending key can be located.
ExperimentConfig ParseConfig(const std::string& text);

// Checks the sections the command depends on (sweep grid, landscape box).
void ValidateForCommand(const ExperimentConfig& config);

// Prefixes "line N: " when the error names a key found in text.
ConfigError WithLine(const std::string& text, const ConfigError& e);

// Everything an operation needs once defaults are filled in.
struct Resolved {
  EnvEntry entry;
  Policy policy;
  Vector theta;
  Vector x1;
  int num_samples = 0;
  double sigma = 0.0;
  double gamma = 0.0;
  double learning_rate = 0.0;
};

// Builds the environment and fills defaults. env_params_override replaces
// keys of the configured env params (used by sweeps).
Resolved Resolve(const ExperimentConfig& config,
                 const nlohmann::json& env_params_override = {});

// 1-based line of the first occurrence of "key" in text, or 0
int LineOfKey(const std::string& text, const std::string& key);

}  // namespace alphagrad::cli

#endif  // ALPHAGRAD_CLI_CONFIG_H_
