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

#include "alphagrad/optimize.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "alphagrad/noise.h"
#include "alphagrad/parallel.h"
#include "alphagrad/rollout.h"

namespace alphagrad {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void Validate(const DescentSettings& s) {
  if (s.steps < 1) throw ConfigError("steps must be at least 1", "steps");
  if (!(s.learning_rate > 0) || !std::isfinite(s.learning_rate)) {
    throw ConfigError("learning rate must be positive", "lr");
  }
  if (s.num_samples < 2) {
    throw ConfigError("N must be at least 2", "N");
  }
  if (!(s.sigma > 0)) throw ConfigError("sigma must be positive", "sigma");
  if (s.eval_samples < 2) {
    throw ConfigError("eval_samples must be at least 2", "eval_samples");
  }
  if (s.method == GradientMethod::kAobg) {
    if (!(s.gamma > 0)) throw ConfigError("gamma must be positive", "gamma");
    if (!(s.delta > 0 && s.delta < 1)) {
      throw ConfigError("delta must lie in (0, 1)", "delta");
    }
  }
}

}  // namespace

const char* MethodName(GradientMethod method) {
  switch (method) {
    case GradientMethod::kFobg:
      return "fobg";
    case GradientMethod::kZobg:
      return "zobg";
    case GradientMethod::kAobg:
      return "aobg";
  }
  return "?";
}

GradientMethod ParseMethod(const std::string& name) {
  if (name == "fobg") return GradientMethod::kFobg;
  if (name == "zobg") return GradientMethod::kZobg;
  if (name == "aobg") return GradientMethod::kAobg;
  throw ConfigError("unknown estimator '" + name + "'", "estimator");
}

ObjectiveEstimate EvaluateObjective(const EnvModel& env, const Policy& policy,
                                    const Vector& theta, const Vector& x1,
                                    int num_rollouts, double sigma,
                                    std::uint64_t eval_seed,
                                    Execution execution) {
  if (num_rollouts < 2) {
    throw ConfigError("evaluation needs at least 2 rollouts", "eval_samples");
  }
  const NoiseModel noise(sigma, env.input_dim());
  const int horizon = env.horizon();
  const auto costs =
      ForEachSample<double>(num_rollouts, execution, [&](int i) {
        NoiseStream stream(eval_seed, "eval", static_cast<std::uint64_t>(i));
        try {
          return Rollout(env, policy, theta, x1, noise.Draw(stream, horizon))
              .total_cost;
        } catch (const DivergedRollout& e) {
          throw e.WithSample(i);
        }
      });
  double sum = 0.0;
  for (double c : costs) sum += c;
  const double mean = sum / num_rollouts;
  double ss = 0.0;
  for (double c : costs) ss += (c - mean) * (c - mean);
  const double standard_error = std::sqrt(ss / (num_rollouts - 1.0) / num_rollouts);
  if (!std::isfinite(mean) || !std::isfinite(standard_error)) {
    // finite returns whose statistics overflow; blame the largest
    const auto worst = std::max_element(
        costs.begin(), costs.end(),
        [](double a, double b) { return std::abs(a) < std::abs(b); });
    throw DivergedRollout(horizon, static_cast<int>(worst - costs.begin()));
  }
  return {mean, standard_error};
}

OptRun GradientDescent(const EnvModel& env, const Policy& policy,
                       const Vector& theta0, const Vector& x1,
                       const DescentSettings& settings) {
  Validate(settings);
  policy.CheckDims(theta0, env.state_dim());
  const NoiseModel noise(settings.sigma, env.input_dim());

  OptRun run;
  run.settings = settings;
  Vector theta = theta0;
  for (int t = 0; t < settings.steps; ++t) {
    IterationLog log;
    log.t = t;
    log.theta = theta;
    try {
      const ObjectiveEstimate cost =
          EvaluateObjective(env, policy, theta, x1, settings.eval_samples,
                            settings.sigma, settings.eval_seed,
                            settings.execution);
      log.cost = cost.mean;
      log.cost_stderr = cost.standard_error;
    } catch (const DivergedRollout& e) {
      log.cost = log.cost_stderr = kNaN;
      log.alpha = log.sig0sq = log.sig1sq = log.gap = log.epsilon = kNaN;
      run.iterations.push_back(std::move(log));
      run.diverged = true;
      run.divergence = e.what();
      break;
    }

    const std::uint64_t seed =
        DeriveSeed(settings.seed, "iteration", static_cast<double>(t));
    Vector grad;
    try {
      switch (settings.method) {
        case GradientMethod::kFobg: {
          const GradientBatch b =
              Fobg(env, policy, theta, x1, settings.num_samples, noise, seed,
                   settings.execution);
          grad = b.mean;
          log.alpha = 1.0;
          log.sig1sq = b.emp_var;
          log.sig0sq = log.gap = log.epsilon = kNaN;
          break;
        }
        case GradientMethod::kZobg: {
          const GradientBatch b =
              Zobg(env, policy, theta, x1, settings.num_samples, noise, seed,
                   settings.use_baseline, settings.execution);
          grad = b.mean;
          log.alpha = 0.0;
          log.sig0sq = b.emp_var;
          log.sig1sq = log.gap = log.epsilon = kNaN;
          break;
        }
        case GradientMethod::kAobg: {
          const GradientBatch first =
              Fobg(env, policy, theta, x1, settings.num_samples, noise, seed,
                   settings.execution);
          const GradientBatch zeroth =
              Zobg(env, policy, theta, x1, settings.num_samples, noise, seed,
                   settings.use_baseline, settings.execution);
          const AobgResult r = Aobg(first, zeroth, settings.gamma,
                                    settings.delta, settings.R);
          grad = r.gradient;
          log.alpha = r.decision.alpha;
          log.sig0sq = r.decision.sig0sq;
          log.sig1sq = r.decision.sig1sq;
          log.gap = r.decision.gap;
          log.epsilon = r.decision.epsilon;
          log.feasible = r.decision.feasible;
          break;
        }
      }
    } catch (const DivergedRollout& e) {
      log.alpha = log.sig0sq = log.sig1sq = log.gap = log.epsilon = kNaN;
      run.iterations.push_back(std::move(log));
      run.diverged = true;
      run.divergence = e.what();
      break;
    }

    // stableNorm: the plain norm overflows for components past ~1e154
    const double norm = grad.stableNorm();
    if (norm > kGradientClipNorm) {
      grad *= kGradientClipNorm / norm;
      log.clipped = true;
      ++run.clip_events;
    }
    run.iterations.push_back(std::move(log));
    theta -= settings.learning_rate * grad;
  }

  run.final_theta = theta;
  if (!run.diverged) {
    try {
      const ObjectiveEstimate cost =
          EvaluateObjective(env, policy, theta, x1, settings.eval_samples,
                            settings.sigma, settings.eval_seed,
                            settings.execution);
      run.final_cost = cost.mean;
      run.final_stderr = cost.standard_error;
    } catch (const DivergedRollout& e) {
      run.diverged = true;
      run.divergence = e.what();
    }
  }
  if (run.diverged) run.final_cost = run.final_stderr = kNaN;
  return run;
}

}  // namespace alphagrad
