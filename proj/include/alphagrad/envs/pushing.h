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

#ifndef ALPHAGRAD_ENVS_PUSHING_H_
#define ALPHAGRAD_ENVS_PUSHING_H_

#include <string>

#include "alphagrad/env.h"

namespace alphagrad {

struct PushingParams {
  double mass1 = 1.0;  // kg, actuated body
  double mass2 = 1.0;  // kg, pushed body
  double half_width1 = 0.1;
  double half_width2 = 0.1;
  double stiffness = 10.0;  // N/m
  double damping = 0.5;     // N s/m
  double timestep = 0.01;
  int horizon = 200;
  double goal = 1.0;  // target position of body 2
  double initial_position1 = 0.0;
  double initial_position2 = 0.5;
  double initial_force = 10.0;  // default open-loop input per step
};

// Two point masses on a line. Body 1 is driven by the input force; contact
// is a penalty spring-damper acting on the penetration p = max(0, -gap):
// f = k p + c (v1 - v2) [p > 0]. Zero penetration takes the zero-force
// branch. State is (x1, v1, x2, v2).
class PushingEnv : public AutoDiffEnv<PushingEnv, 4, 1> {
 public:
  explicit PushingEnv(PushingParams params = {});

  const PushingParams& params() const { return params_; }

  std::string name() const override { return "pushing"; }
  int horizon() const override { return params_.horizon; }
  double timestep() const override { return params_.timestep; }
  bool smooth_everywhere() const override { return false; }
  bool AtBranchPoint(int h, const Vector& x, const Vector& u) const override;
  Vector DefaultInitialState() const override;
  Vector DefaultTheta() const override {
    return Vector::Constant(params_.horizon, params_.initial_force);
  }

  // force on body 2 (body 1 receives the opposite)
  template <class T>
  T ContactForce(const State<T>& x) const {
    const T gap = (x[2] - params_.half_width2) - (x[0] + params_.half_width1);
    if (Value(gap) >= 0.0) return T(0.0);
    return -params_.stiffness * gap + params_.damping * (x[1] - x[3]);
  }

  // semi-implicit Euler: velocities first, then positions with new velocities
  template <class T>
  State<T> StepT(int /*h*/, const State<T>& x, const Input<T>& u) const {
    const double dt = params_.timestep;
    const T f = ContactForce(x);
    const T v1 = x[1] + dt * (u[0] - f) / params_.mass1;
    const T v2 = x[3] + dt * f / params_.mass2;
    return {x[0] + dt * v1, v1, x[2] + dt * v2, v2};
  }

  template <class T>
  T CostT(int /*h*/, const State<T>& x, const Input<T>& /*u*/) const {
    const T e = x[2] - params_.goal;
    return e * e;
  }

 private:
  PushingParams params_;
};

}  // namespace alphagrad

#endif  // ALPHAGRAD_ENVS_PUSHING_H_
