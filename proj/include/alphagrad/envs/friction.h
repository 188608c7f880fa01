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

#ifndef ALPHAGRAD_ENVS_FRICTION_H_
#define ALPHAGRAD_ENVS_FRICTION_H_

#include <string>

#include "alphagrad/env.h"
#include "alphagrad/envs/coulomb.h"

namespace alphagrad {

struct FrictionParams {
  double friction_coefficient = 0.5;
  double normal_force = 9.81;  // N
  double slip_tolerance = 0.1; // m/s
  double half_length = 0.5;    // carrier half-length, m
  double carrier_mass = 1.0;
  double box_mass = 1.0;
  double timestep = 0.01;
  int horizon = 100;
  double goal = 1.0;  // target box position
  double input_weight = 1e-3;
  double initial_force = 0.0;
};

// A box carried on an actuated carrier. While the box sits on the carrier
// (|x_box - x_carrier| <= half_length) it feels the relaxed Coulomb force
// mu N RelaxedSign(v_carrier - v_box); once it slides past the edge it gets
// no friction at all. State is (x_carrier, v_carrier, x_box, v_box); the
// input is the force on the carrier.
class FrictionEnv : public AutoDiffEnv<FrictionEnv, 4, 1> {
 public:
  explicit FrictionEnv(FrictionParams params = {});

  const FrictionParams& params() const { return params_; }

  std::string name() const override { return "friction"; }
  int horizon() const override { return params_.horizon; }
  double timestep() const override { return params_.timestep; }
  bool smooth_everywhere() const override { return false; }
  bool AtBranchPoint(int h, const Vector& x, const Vector& u) const override;
  Vector DefaultInitialState() const override { return Vector::Zero(4); }
  Vector DefaultTheta() const override {
    return Vector::Constant(params_.horizon, params_.initial_force);
  }

  // friction force on the box
  template <class T>
  T FrictionForce(const State<T>& x) const {
    const double rel = Value(x[2]) - Value(x[0]);
    if (rel > params_.half_length || rel < -params_.half_length) return T(0.0);
    return params_.friction_coefficient * params_.normal_force *
           RelaxedSign(x[1] - x[3], params_.slip_tolerance);
  }

  template <class T>
  State<T> StepT(int /*h*/, const State<T>& x, const Input<T>& u) const {
    const double dt = params_.timestep;
    const T f = FrictionForce(x);
    const T vc = x[1] + dt * (u[0] - f) / params_.carrier_mass;
    const T vb = x[3] + dt * f / params_.box_mass;
    return {x[0] + dt * vc, vc, x[2] + dt * vb, vb};
  }

  template <class T>
  T CostT(int /*h*/, const State<T>& x, const Input<T>& u) const {
    const T e = x[2] - params_.goal;
    return e * e + params_.input_weight * u[0] * u[0];
  }

 private:
  FrictionParams params_;
};

}  // namespace alphagrad

#endif  // ALPHAGRAD_ENVS_FRICTION_H_
