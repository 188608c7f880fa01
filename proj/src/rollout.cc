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

#include "alphagrad/rollout.h"

#include <cmath>
#include <stdexcept>
#include <string>

namespace alphagrad {
namespace {

void CheckInputs(const EnvModel& env, const Policy& policy,
                 const Vector& theta, const Vector& x1, const Matrix& noises) {
  const int n = env.state_dim();
  const int m = env.input_dim();
  const int horizon = env.horizon();
  if (x1.size() != n) {
    throw ConfigError("initial state has dimension " +
                      std::to_string(x1.size()) + ", env expects " +
                      std::to_string(n));
  }
  if (policy.input_dim() != m) {
    throw ConfigError("policy input dimension does not match env");
  }
  if (policy.kind() == PolicyKind::kOpenLoop && policy.horizon() != horizon) {
    throw ConfigError("open-loop policy horizon does not match env");
  }
  policy.CheckDims(theta, n);
  if (noises.rows() != m || noises.cols() != horizon) {
    throw ConfigError("noise matrix must be " + std::to_string(m) + " x " +
                      std::to_string(horizon));
  }
}

bool AllFinite(const Vector& v) { return v.allFinite(); }

}  // namespace

Trajectory Rollout(const EnvModel& env, const Policy& policy,
                   const Vector& theta, const Vector& x1,
                   const Matrix& noises) {
  CheckInputs(env, policy, theta, x1, noises);
  const int horizon = env.horizon();

  Trajectory traj;
  traj.noises = noises;
  traj.states.reserve(horizon + 1);
  traj.inputs.reserve(horizon);
  traj.step_costs.reserve(horizon);
  traj.states.push_back(x1);

  double total = 0.0;
  for (int h = 0; h < horizon; ++h) {
    const Vector& x = traj.states.back();
    Vector u = policy.Eval(h, x, theta) + noises.col(h);
    double cost = env.Cost(h, x, u);
    Vector next = env.Step(h, x, u);
    if (!AllFinite(next) || !std::isfinite(cost)) throw DivergedRollout(h + 1);
    if (h == horizon - 1) {
      cost += env.TerminalCost(next);
      if (!std::isfinite(cost)) throw DivergedRollout(h + 1);
    }
    // finite step costs can still overflow the running sum
    total += cost;
    if (!std::isfinite(total)) throw DivergedRollout(h + 1);
    traj.step_costs.push_back(cost);
    traj.inputs.push_back(std::move(u));
    traj.states.push_back(std::move(next));
  }
  traj.total_cost = total;
  return traj;
}

GradientRollout RolloutWithGradient(const EnvModel& env, const Policy& policy,
                                    const Vector& theta, const Vector& x1,
                                    const Matrix& noises) {
  CheckInputs(env, policy, theta, x1, noises);
  const int horizon = env.horizon();
  const int n = env.state_dim();
  const int d = policy.param_dim();
  const bool feedback = policy.kind() == PolicyKind::kLinearFeedback;

  GradientRollout out;
  out.gradient = Vector::Zero(d);

  // dual state: value x, tangent block S = dx/dtheta
  Vector x = x1;
  Matrix sens = Matrix::Zero(n, d);
  Matrix input_sens;
  double total = 0.0;

  for (int h = 0; h < horizon; ++h) {
    const Vector u = policy.Eval(h, x, theta) + noises.col(h);
    input_sens = policy.JacobianTheta(h, x, theta);
    if (feedback) input_sens.noalias() += policy.JacobianState(h, x, theta) * sens;

    double cost = env.Cost(h, x, u);
    const CostGradient cg = env.CostDerivatives(h, x, u);
    out.gradient.noalias() += sens.transpose() * cg.state;
    out.gradient.noalias() += input_sens.transpose() * cg.input;

    const StepJacobians jac = env.StepDerivatives(h, x, u);
    if (env.AtBranchPoint(h, x, u)) ++out.branch_hits;
    Vector next = env.Step(h, x, u);
    if (!AllFinite(next) || !std::isfinite(cost)) throw DivergedRollout(h + 1);

    Matrix next_sens = jac.state * sens;
    next_sens.noalias() += jac.input * input_sens;
    sens = std::move(next_sens);
    x = std::move(next);

    if (h == horizon - 1) {
      cost += env.TerminalCost(x);
      if (!std::isfinite(cost)) throw DivergedRollout(h + 1);
      out.gradient.noalias() += sens.transpose() * env.TerminalCostGradient(x);
    }
    total += cost;
    if (!std::isfinite(total)) throw DivergedRollout(h + 1);
  }
  if (!out.gradient.allFinite()) throw DivergedRollout(horizon);
  out.value = total;
  return out;
}

double ValueToGo(const Trajectory& traj, int h) {
  if (h < 1 || h > traj.horizon()) {
    throw std::out_of_range("value_to_go step " + std::to_string(h) +
                            " outside [1, " + std::to_string(traj.horizon()) +
                            "]");
  }
  double total = 0.0;
  for (int i = h - 1; i < traj.horizon(); ++i) total += traj.step_costs[i];
  return total;
}

Matrix PolicyJacobian(const Policy& policy, int h, const Vector& x,
                      const Vector& theta) {
  if (policy.kind() == PolicyKind::kOpenLoop &&
      (h < 0 || h >= policy.horizon())) {
    throw std::out_of_range("policy step index out of range");
  }
  if (x.size() < policy.observed_dim()) {
    throw ConfigError("state too short for policy");
  }
  if (theta.size() != policy.param_dim()) {
    throw ConfigError("theta dimension does not match policy");
  }
  return policy.JacobianTheta(h, x, theta);
}

}  // namespace alphagrad
