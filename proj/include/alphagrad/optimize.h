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

#ifndef ALPHAGRAD_OPTIMIZE_H_
#define ALPHAGRAD_OPTIMIZE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "alphagrad/env.h"
#include "alphagrad/estimators.h"
#include "alphagrad/policy.h"

namespace alphagrad {

enum class GradientMethod { kFobg, kZobg, kAobg };

const char* MethodName(GradientMethod method);
// "fobg", "zobg" or "aobg"; ConfigError otherwise
GradientMethod ParseMethod(const std::string& name);

struct ObjectiveEstimate {
  double mean = 0.0;
  double standard_error = 0.0;
};

// Monte-Carlo estimate of F(theta) over M rollouts on streams
// (eval_seed, "eval", i). Requires M >= 2. Throws DivergedRollout.
ObjectiveEstimate EvaluateObjective(const EnvModel& env, const Policy& policy,
                                    const Vector& theta, const Vector& x1,
                                    int num_rollouts, double sigma,
                                    std::uint64_t eval_seed,
                                    Execution execution = Execution::kParallel);

struct DescentSettings {
  GradientMethod method = GradientMethod::kAobg;
  int steps = 100;
  double learning_rate = 0.01;
  int num_samples = 1000;
  double sigma = 0.1;
  double gamma = 1.0;
  double delta = 0.05;
  std::optional<double> R;
  bool use_baseline = true;
  int eval_samples = 1000;
  std::uint64_t seed = 0;
  // shared by every method so cost curves are comparable
  std::uint64_t eval_seed = 0;
  Execution execution = Execution::kParallel;
};

// One logged iteration. Columns that do not apply to the method are NaN:
// fobg logs only sig1sq, zobg only sig0sq; B and epsilon are aobg only.
struct IterationLog {
  int t = 0;
  Vector theta;
  double cost = 0.0;
  double cost_stderr = 0.0;
  double alpha = 0.0;  // 1 for fobg, 0 for zobg
  double sig0sq = 0.0;
  double sig1sq = 0.0;
  double gap = 0.0;
  double epsilon = 0.0;
  bool feasible = true;
  bool clipped = false;
};

struct OptRun {
  DescentSettings settings;
  std::vector<IterationLog> iterations;
  Vector final_theta;
  double final_cost = 0.0;
  double final_stderr = 0.0;
  bool diverged = false;
  std::string divergence;
  int clip_events = 0;
};

inline constexpr double kGradientClipNorm = 1e6;

// Fixed-step descent theta_{t+1} = theta_t - lr * g_t. Iteration t draws its
// estimator batches from seed DeriveSeed(seed, "iteration", t). A diverged
// rollout ends the run early; the failing iteration is logged with NaN
// estimates after the history so far.
OptRun GradientDescent(const EnvModel& env, const Policy& policy,
                       const Vector& theta0, const Vector& x1,
                       const DescentSettings& settings);

}  // namespace alphagrad

#endif  // ALPHAGRAD_OPTIMIZE_H_
