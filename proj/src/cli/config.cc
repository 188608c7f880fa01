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

#include "alphagrad/cli/config.h"

#include <algorithm>

#include "alphagrad/json_params.h"

namespace alphagrad::cli {
namespace {

const std::vector<std::string> kCommands = {"estimate", "sweep", "optimize",
                                            "landscape"};

void Require(bool ok, const std::string& what, const std::string& key) {
  if (!ok) throw ConfigError(what, key);
}

std::vector<double> ReadVector(const nlohmann::json& v,
                               const std::string& key) {
  Require(v.is_array(), key + ": expected an array of numbers", key);
  std::vector<double> out;
  for (const auto& item : v) {
    Require(item.is_number(), key + ": expected an array of numbers", key);
    out.push_back(item.get<double>());
  }
  return out;
}

void ParseEstimator(ParamReader r, EstimatorSettings& s) {
  if (r.Has("N")) s.num_samples = r.Integer("N", 0);
  s.sigma = r.OptionalNumber("sigma");
  s.gamma = r.OptionalNumber("gamma");
  s.delta = r.Number("delta", s.delta);
  s.R = r.OptionalNumber("R");
  s.use_baseline = r.Bool("use_baseline", s.use_baseline);
  r.Finish();
  Require(!s.num_samples || *s.num_samples >= 2, "estimator.N must be >= 2",
          "N");
  Require(!s.sigma || *s.sigma > 0, "estimator.sigma must be positive",
          "sigma");
  Require(!s.gamma || *s.gamma > 0, "estimator.gamma must be positive",
          "gamma");
  Require(s.delta > 0 && s.delta < 1, "estimator.delta must lie in (0, 1)",
          "delta");
  Require(!s.R || *s.R >= 0, "estimator.R must be non-negative", "R");
}

void ParseOptimizer(ParamReader r, OptimizerSettings& s) {
  s.estimator = r.String("estimator", s.estimator);
  ParseMethod(s.estimator);
  s.steps = r.Integer("steps", s.steps);
  s.learning_rate = r.OptionalNumber("lr");
  if (r.Has("theta0")) s.theta0 = ReadVector(r.Raw("theta0"), "theta0");
  r.Raw("theta0");
  s.eval_samples = r.Integer("eval_samples", s.eval_samples);
  if (r.Has("eval_seed")) s.eval_seed = r.Unsigned("eval_seed", 0);
  r.Raw("eval_seed");
  r.Finish();
  Require(s.steps >= 1, "optimizer.steps must be >= 1", "steps");
  Require(!s.learning_rate || *s.learning_rate > 0,
          "optimizer.lr must be positive", "lr");
  Require(s.eval_samples >= 2, "optimizer.eval_samples must be >= 2",
          "eval_samples");
}

void ParseSweep(ParamReader r, SweepSettings& s) {
  s.parameter = r.String("parameter", s.parameter);
  s.grid = r.Numbers("grid", s.grid);
  s.zero_batch_size = r.Integer("zero_batch_size", s.zero_batch_size);
  r.Finish();
  Require(s.zero_batch_size >= 1, "sweep.zero_batch_size must be >= 1",
          "zero_batch_size");
}

void CheckSweep(const SweepSettings& s) {
  Require(!s.parameter.empty(), "sweep.parameter is required", "sweep");
  Require(!s.grid.empty(), "sweep.grid is empty", "grid");
  for (std::size_t i = 1; i < s.grid.size(); ++i) {
    Require(s.grid[i] > s.grid[i - 1],
            "sweep.grid must be strictly increasing", "grid");
  }
}

void ParseLandscape(ParamReader r, LandscapeSettings& s) {
  s.coords = r.Integers("coords", s.coords);
  s.lo = r.Numbers("lo", s.lo);
  s.hi = r.Numbers("hi", s.hi);
  s.points = r.Integer("points", s.points);
  if (r.Has("N")) s.num_samples = r.Integer("N", 0);
  r.Raw("N");
  r.Finish();
}

void CheckLandscape(const LandscapeSettings& s) {
  Require(s.coords.size() == 1 || s.coords.size() == 2,
          "landscape.coords must name one or two parameters", "coords");
  Require(s.lo.size() == s.coords.size(),
          "landscape.lo must match coords in length", "lo");
  Require(s.hi.size() == s.coords.size(),
          "landscape.hi must match coords in length", "hi");
  for (std::size_t i = 0; i < s.lo.size(); ++i) {
    Require(s.lo[i] < s.hi[i], "landscape.lo must be below hi", "lo");
  }
  Require(s.points >= 2, "landscape.points must be >= 2", "points");
  Require(!s.num_samples || *s.num_samples >= 2, "landscape.N must be >= 2",
          "N");
}

}  // namespace

int LineOfKey(const std::string& text, const std::string& key) {
  const auto pos = text.find("\"" + key + "\"");
  if (pos == std::string::npos) return 0;
  return 1 + static_cast<int>(
                 std::count(text.begin(), text.begin() + pos, '\n'));
}

ExperimentConfig ParseConfig(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const std::size_t end = std::min(e.byte, text.size());
    const int line =
        1 + static_cast<int>(std::count(
                text.begin(), text.begin() + (end > 0 ? end - 1 : 0), '\n'));
    throw ConfigError("line " + std::to_string(line) + ": malformed JSON");
  }

  ExperimentConfig c;
  try {
    ParamReader r(doc, "config");
    c.command = r.String("command", "");
    Require(c.command.empty() || std::find(kCommands.begin(), kCommands.end(),
                                           c.command) != kCommands.end(),
            "unknown command '" + c.command + "'", "command");

    ParamReader env(r.Raw("env"), "env");
    c.env_name = env.String("name", "");
    Require(!c.env_name.empty(), "env.name is required", "env");
    const nlohmann::json params = env.Raw("params");
    Require(params.is_null() || params.is_object(),
            "env.params must be an object", "params");
    if (params.is_object()) c.env_params = params;
    env.Finish();

    if (r.Has("theta")) c.theta = ReadVector(r.Raw("theta"), "theta");
    r.Raw("theta");
    if (r.Has("x1")) c.x1 = ReadVector(r.Raw("x1"), "x1");
    r.Raw("x1");

    ParseEstimator(ParamReader(r.Raw("estimator"), "estimator"), c.estimator);
    ParseOptimizer(ParamReader(r.Raw("optimizer"), "optimizer"), c.optimizer);
    ParseSweep(ParamReader(r.Raw("sweep"), "sweep"), c.sweep);
    ParseLandscape(ParamReader(r.Raw("landscape"), "landscape"), c.landscape);
    c.seed = r.Unsigned("seed", c.seed);
    c.output_dir = r.String("output_dir", c.output_dir);
    r.Finish();
    if (!c.command.empty()) ValidateForCommand(c);
  } catch (const ConfigError& e) {
    throw WithLine(text, e);
  }
  return c;
}

void ValidateForCommand(const ExperimentConfig& config) {
  if (config.command == "sweep") CheckSweep(config.sweep);
  if (config.command == "landscape") CheckLandscape(config.landscape);
}

ConfigError WithLine(const std::string& text, const ConfigError& e) {
  const std::string what = e.what();
  if (what.rfind("line ", 0) == 0) return e;
  const int line = e.key().empty() ? 0 : LineOfKey(text, e.key());
  if (line == 0) return e;
  return ConfigError("line " + std::to_string(line) + ": " + what, e.key());
}

Resolved Resolve(const ExperimentConfig& config,
                 const nlohmann::json& env_params_override) {
  nlohmann::json params = config.env_params;
  if (env_params_override.is_object()) {
    for (const auto& [k, v] : env_params_override.items()) params[k] = v;
  }
  Resolved r{MakeEnv(config.env_name, params), Policy::OpenLoop(1, 1), {}, {}};
  const EnvModel& env = *r.entry.env;
  r.policy = env.DefaultPolicy();

  auto to_vector = [](const std::vector<double>& v) {
    return Vector(Eigen::Map<const Vector>(v.data(), v.size()));
  };
  r.theta = config.theta ? to_vector(*config.theta) : env.DefaultTheta();
  Require(r.theta.size() == r.policy.param_dim(),
          "theta must have " + std::to_string(r.policy.param_dim()) +
              " entries",
          "theta");
  r.x1 = config.x1 ? to_vector(*config.x1) : env.DefaultInitialState();
  Require(r.x1.size() == env.state_dim(),
          "x1 must have " + std::to_string(env.state_dim()) + " entries",
          "x1");

  const ExperimentDefaults& d = r.entry.defaults;
  r.num_samples = config.estimator.num_samples.value_or(d.num_samples);
  r.sigma = config.estimator.sigma.value_or(d.sigma);
  r.gamma = config.estimator.gamma.value_or(d.gamma);
  r.learning_rate = config.optimizer.learning_rate.value_or(d.learning_rate);

  if (config.optimizer.theta0) {
    Require(static_cast<int>(config.optimizer.theta0->size()) ==
                r.policy.param_dim(),
            "optimizer.theta0 must have " +
                std::to_string(r.policy.param_dim()) + " entries",
            "theta0");
  }
  for (int coord : config.landscape.coords) {
    Require(coord >= 0 && coord < r.policy.param_dim(),
            "landscape.coords entry out of range", "coords");
  }
  return r;
}

}  // namespace alphagrad::cli
