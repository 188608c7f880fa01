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

#ifndef ALPHAGRAD_ENVS_QUADRATIC_H_
#define ALPHAGRAD_ENVS_QUADRATIC_H_

#include <string>

#include "alphagrad/env.h"

namespace alphagrad {

// Scalar integrator x' = x + gain * u with cost
// q x^2 + r u^2 + l u + c0 per step. Smooth everywhere; the workhorse for
// unbiasedness and variance-identity checks.
struct QuadraticParams {
  int horizon = 1;
  double gain = 1.0;
  double state_weight = 0.0;
  double input_weight = 1.0;
  double linear_weight = 0.0;
  double constant = 0.0;
  double initial_state = 0.0;
  double initial_input = 1.0;
};

class QuadraticEnv : public AutoDiffEnv<QuadraticEnv, 1, 1> {
 public:
  explicit QuadraticEnv(QuadraticParams params = {});

  const QuadraticParams& params() const { return params_; }

  std::string name() const override { return "quadratic"; }
  int horizon() const override { return params_.horizon; }
  bool smooth_everywhere() const override { return true; }
  Vector DefaultInitialState() const override {
    return Vector::Constant(1, params_.initial_state);
  }
  Vector DefaultTheta() const override {
    return Vector::Constant(params_.horizon, params_.initial_input);
  }

  template <class T>
  State<T> StepT(int /*h*/, const State<T>& x, const Input<T>& u) const {
    return {x[0] + params_.gain * u[0]};
  }
  template <class T>
  T CostT(int /*h*/, const State<T>& x, const Input<T>& u) const {
    return params_.state_weight * x[0] * x[0] +
           params_.input_weight * u[0] * u[0] + params_.linear_weight * u[0] +
           params_.constant;
  }

 private:
  QuadraticParams params_;
};

}  // namespace alphagrad

#endif  // ALPHAGRAD_ENVS_QUADRATIC_H_
