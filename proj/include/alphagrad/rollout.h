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

#ifndef ALPHAGRAD_ROLLOUT_H_
#define ALPHAGRAD_ROLLOUT_H_

#include <vector>

#include "alphagrad/env.h"
#include "alphagrad/policy.h"
#include "alphagrad/types.h"

namespace alphagrad {

// States x_1..x_{H+1}, inputs u_h = pi(x_h, theta) + w_h, and per-step costs.
// A terminal cost, if the environment has one, is folded into the last step
// cost so that total_cost is always the plain sum of step_costs.
struct Trajectory {
  std::vector<Vector> states;
  std::vector<Vector> inputs;
  Matrix noises;  // m x H
  std::vector<double> step_costs;
  double total_cost = 0.0;

  int horizon() const { return static_cast<int>(step_costs.size()); }
};

struct GradientRollout {
  double value = 0.0;
  Vector gradient;
  // number of derivative evaluations that fell on a branch point
  int branch_hits = 0;
};

// Simulates the closed loop. Pure function of its inputs. Throws ConfigError
// on inconsistent dimensions and DivergedRollout when a state or cost
// becomes non-finite.
Trajectory Rollout(const EnvModel& env, const Policy& policy,
                   const Vector& theta, const Vector& x1,
                   const Matrix& noises);

// V_1 and its exact derivative with respect to theta, holding x_1 and the
// noises fixed. The state sensitivity dx_h/dtheta (n x d) is carried forward
// as the tangent block of a vector of duals and pushed through the step,
// policy and cost Jacobians. The value matches Rollout().total_cost bit for
// bit.
GradientRollout RolloutWithGradient(const EnvModel& env, const Policy& policy,
                                    const Vector& theta, const Vector& x1,
                                    const Matrix& noises);

// sum of step costs from 1-based step h through H
double ValueToGo(const Trajectory& traj, int h);

// D_theta pi at step h (0-based)
Matrix PolicyJacobian(const Policy& policy, int h, const Vector& x,
                      const Vector& theta);

}  // namespace alphagrad

#endif  // ALPHAGRAD_ROLLOUT_H_
