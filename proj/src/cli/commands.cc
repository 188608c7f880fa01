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

#include "alphagrad/cli/commands.h"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include "alphagrad/analysis.h"
#include "alphagrad/cli/svg.h"
#include "alphagrad/estimators.h"
#include "alphagrad/noise.h"
#include "alphagrad/optimize.h"
#include "alphagrad/rollout.h"

namespace alphagrad::cli {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::vector<std::string> Indexed(const std::string& prefix, int count) {
  std::vector<std::string> names;
  for (int i = 0; i < count; ++i) names.push_back(prefix + std::to_string(i));
  return names;
}

void Append(std::vector<std::string>& to, const std::vector<std::string>& v) {
  to.insert(to.end(), v.begin(), v.end());
}

// Applies a sweep value to a copy of the config. Estimator settings are
// swept directly; anything else is an env parameter.
Resolved ResolveAt(const ExperimentConfig& config, double value) {
  const std::string& p = config.sweep.parameter;
  if (p == "sigma") {
    if (!(value > 0)) throw ConfigError("sweep: sigma must be positive", "grid");
    ExperimentConfig c = config;
    c.estimator.sigma = value;
    return Resolve(c);
  }
  if (p == "N") {
    if (value < 2 || value != std::floor(value)) {
      throw ConfigError("sweep: N values must be integers >= 2", "grid");
    }
    ExperimentConfig c = config;
    c.estimator.num_samples = static_cast<int>(value);
    return Resolve(c);
  }
  return Resolve(config, nlohmann::json{{p, value}});
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteFile(const std::filesystem::path& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary);
  out << data;
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
}

}  // namespace

CommandOutput RunEstimate(const ExperimentConfig& config) {
  const Resolved r = Resolve(config);
  const EnvModel& env = *r.entry.env;
  const int d = r.policy.param_dim();

  CommandOutput out;
  out.table.schema = "estimate";
  out.table.columns = {"estimator", "N",       "var",      "stderr", "B",
                       "epsilon",   "alpha",   "feasible", "branch_hits"};
  Append(out.table.columns, Indexed("g_", d));
  out.table.optional_columns = {"B", "epsilon", "feasible"};

  const NoiseModel noise(r.sigma, env.input_dim());
  try {
    const GradientBatch first = Fobg(env, r.policy, r.theta, r.x1,
                                     r.num_samples, noise, config.seed);
    const GradientBatch zeroth =
        Zobg(env, r.policy, r.theta, r.x1, r.num_samples, noise, config.seed,
             config.estimator.use_baseline);
    const AobgResult blend = Aobg(first, zeroth, r.gamma,
                                  config.estimator.delta, config.estimator.R);
    const double n = r.num_samples;
    auto row = [&](double code, double var, double B, double eps,
                   double alpha, double feasible, double hits,
                   const Vector& g) {
      std::vector<double> cells = {code, n,        var,      std::sqrt(var / n),
                                   B,    eps,      alpha,    feasible,
                                   hits};
      cells.insert(cells.end(), g.data(), g.data() + g.size());
      out.table.AddRow(std::move(cells));
    };
    row(0, zeroth.emp_var, kNaN, kNaN, 0.0, kNaN, 0, zeroth.mean);
    row(1, first.emp_var, kNaN, kNaN, 1.0, kNaN, first.branch_hits,
        first.mean);
    const AlphaDecision& dec = blend.decision;
    const double a = dec.alpha;
    row(2, a * a * dec.sig1sq + (1 - a) * (1 - a) * dec.sig0sq, dec.gap,
        dec.epsilon, a, dec.feasible ? 1.0 : 0.0, first.branch_hits,
        blend.gradient);
  } catch (const DivergedRollout& e) {
    out.exit_code = kExitDiverged;
    out.message = e.what();
  }
  return out;
}

CommandOutput RunSweep(const ExperimentConfig& config) {
  CommandOutput out;
  out.table.schema = "sweep";
  out.table.columns = {"param",     "value",           "var_fobg", "var_zobg",
                       "zero_batch_rate", "mean_gap", "diverged"};
  out.table.optional_columns = {"var_fobg", "var_zobg", "zero_batch_rate",
                                "mean_gap"};

  alphagrad::SweepSettings settings;
  settings.use_baseline = config.estimator.use_baseline;
  settings.seed = config.seed;
  settings.zero_batch_size = config.sweep.zero_batch_size;
  const SweepResult result = VarianceSweep(
      [&](double value) {
        const Resolved r = ResolveAt(config, value);
        return SweepCase{r.entry.env, r.policy,        r.theta,
                         r.x1,        r.num_samples, r.sigma};
      },
      config.sweep.parameter, config.sweep.grid, settings);

  for (std::size_t i = 0; i < result.records.size(); ++i) {
    const SweepRecord& rec = result.records[i];
    out.table.AddRow({static_cast<double>(i), rec.value, rec.var_fobg,
                      rec.var_zobg, rec.zero_batch_rate, rec.mean_gap,
                      rec.diverged ? 1.0 : 0.0});
    if (rec.diverged && out.exit_code == kExitOk) {
      out.exit_code = kExitDiverged;
      out.message = "row " + std::to_string(i) + ": " + rec.error;
    }
  }
  return out;
}

CommandOutput RunOptimize(const ExperimentConfig& config) {
  const Resolved r = Resolve(config);
  const int d = r.policy.param_dim();
  Vector theta0 = r.theta;
  if (config.optimizer.theta0) {
    theta0 = Eigen::Map<const Vector>(config.optimizer.theta0->data(), d);
  }

  DescentSettings s;
  s.method = ParseMethod(config.optimizer.estimator);
  s.steps = config.optimizer.steps;
  s.learning_rate = r.learning_rate;
  s.num_samples = r.num_samples;
  s.sigma = r.sigma;
  s.gamma = r.gamma;
  s.delta = config.estimator.delta;
  s.R = config.estimator.R;
  s.use_baseline = config.estimator.use_baseline;
  s.eval_samples = config.optimizer.eval_samples;
  s.seed = config.seed;
  s.eval_seed = config.optimizer.eval_seed.value_or(config.seed);
  const OptRun run = GradientDescent(*r.entry.env, r.policy, theta0, r.x1, s);

  CommandOutput out;
  out.table.schema = "optimize";
  out.table.columns = {"t",      "cost", "stderr",  "alpha",  "sig0sq",
                       "sig1sq", "B",    "epsilon", "clipped"};
  Append(out.table.columns, Indexed("theta_", d));
  // cost and stderr are NaN only on the row where a run diverged
  out.table.optional_columns = {"cost",   "stderr", "alpha",
                                "sig0sq", "sig1sq", "B",
                                "epsilon"};
  for (const IterationLog& it : run.iterations) {
    std::vector<double> cells = {static_cast<double>(it.t),
                                 it.cost,
                                 it.cost_stderr,
                                 it.alpha,
                                 it.sig0sq,
                                 it.sig1sq,
                                 it.gap,
                                 it.epsilon,
                                 it.clipped ? 1.0 : 0.0};
    cells.insert(cells.end(), it.theta.data(), it.theta.data() + d);
    out.table.AddRow(std::move(cells));
  }
  if (run.diverged) {
    out.exit_code = kExitDiverged;
    out.message = run.divergence;
  }
  return out;
}

CommandOutput RunLandscape(const ExperimentConfig& config) {
  const Resolved r = Resolve(config);
  const EnvModel& env = *r.entry.env;
  const LandscapeSettings& ls = config.landscape;
  const int n = ls.num_samples.value_or(r.num_samples);
  const int axes = static_cast<int>(ls.coords.size());

  CommandOutput out;
  out.table.schema = "landscape";
  for (int c : ls.coords) out.table.columns.push_back("theta_" + std::to_string(c));
  Append(out.table.columns, {"cost", "smoothed", "smoothed_stderr"});
  for (int c : ls.coords) out.table.columns.push_back("fobg_" + std::to_string(c));
  for (int c : ls.coords) out.table.columns.push_back("zobg_" + std::to_string(c));
  for (std::size_t i = axes; i < out.table.columns.size(); ++i) {
    out.table.optional_columns.insert(out.table.columns[i]);
  }

  const NoiseModel noise(r.sigma, env.input_dim());
  const Matrix zero = Matrix::Zero(env.input_dim(), env.horizon());
  auto coord = [&](int axis, int k) {
    return ls.lo[axis] + (ls.hi[axis] - ls.lo[axis]) * k / (ls.points - 1.0);
  };
  const int total = axes == 1 ? ls.points : ls.points * ls.points;
  for (int p = 0; p < total; ++p) {
    Vector theta = r.theta;
    std::vector<double> cells;
    const int idx[2] = {axes == 1 ? p : p / ls.points, p % ls.points};
    for (int a = 0; a < axes; ++a) {
      theta[ls.coords[a]] = coord(a, idx[a]);
      cells.push_back(theta[ls.coords[a]]);
    }
    try {
      cells.push_back(Rollout(env, r.policy, theta, r.x1, zero).total_cost);
      const ObjectiveEstimate smooth = EvaluateObjective(
          env, r.policy, theta, r.x1, n, r.sigma, config.seed);
      cells.push_back(smooth.mean);
      cells.push_back(smooth.standard_error);
      const GradientBatch first =
          Fobg(env, r.policy, theta, r.x1, n, noise, config.seed);
      const GradientBatch zeroth = Zobg(env, r.policy, theta, r.x1, n, noise,
                                        config.seed,
                                        config.estimator.use_baseline);
      for (int c : ls.coords) cells.push_back(first.mean[c]);
      for (int c : ls.coords) cells.push_back(zeroth.mean[c]);
    } catch (const DivergedRollout& e) {
      cells.resize(out.table.columns.size(), kNaN);
      if (out.exit_code == kExitOk) {
        out.exit_code = kExitDiverged;
        out.message = "point " + std::to_string(p) + ": " + e.what();
      }
    }
    out.table.AddRow(std::move(cells));
  }
  return out;
}

CommandOutput RunCommand(const ExperimentConfig& config) {
  if (config.command == "estimate") return RunEstimate(config);
  if (config.command == "sweep") return RunSweep(config);
  if (config.command == "optimize") return RunOptimize(config);
  if (config.command == "landscape") return RunLandscape(config);
  throw ConfigError("unknown command '" + config.command + "'", "command");
}

int Execute(const Invocation& inv, std::ostream& err) {
  ExperimentConfig config;
  std::optional<PlotSpec> plot;
  std::string text;
  try {
    text = ReadFile(inv.config_path);
    config = ParseConfig(text);
    if (!config.command.empty() && config.command != inv.command) {
      throw ConfigError("config command '" + config.command +
                            "' does not match '" + inv.command + "'",
                        "command");
    }
    config.command = inv.command;
    if (inv.seed) config.seed = *inv.seed;
    if (inv.out_dir) config.output_dir = *inv.out_dir;
    if (inv.plot_path) {
      nlohmann::json doc;
      try {
        doc = nlohmann::json::parse(ReadFile(*inv.plot_path));
      } catch (const nlohmann::json::parse_error&) {
        throw ConfigError("plot spec is malformed JSON");
      }
      plot = ParsePlotSpec(doc);
    }
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  }

  // validate every resolved setup before computing anything
  try {
    ValidateForCommand(config);
    Resolve(config);
    if (config.command == "sweep") {
      for (double v : config.sweep.grid) ResolveAt(config, v);
    }
  } catch (const ConfigError& e) {
    err << "error: " << WithLine(text, e).what() << "\n";
    return kExitConfig;
  }

  CommandOutput out;
  std::string svg;
  try {
    out = RunCommand(config);
    out.table.Validate();
    if (plot) svg = EmitSvg(out.table, *plot);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  }

  const std::filesystem::path dir(config.output_dir);
  std::filesystem::create_directories(dir);
  WriteFile(dir / (config.command + ".csv"), ToCsv(out.table));
  if (plot) WriteFile(dir / (config.command + ".svg"), svg);
  if (out.exit_code != kExitOk) err << "diverged: " << out.message << "\n";
  return out.exit_code;
}

}  // namespace alphagrad::cli
