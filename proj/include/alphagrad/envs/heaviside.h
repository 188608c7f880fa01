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

#ifndef ALPHAGRAD_ENVS_HEAVISIDE_H_
#define ALPHAGRAD_ENVS_HEAVISIDE_H_

#include <string>

#include "alphagrad/env.h"

namespace alphagrad {

// H(t) = 1 for t >= 0, else 0. Derivative is zero everywhere, including the
// jump (branch rule H'(0) := 0).
template <class T>
T Heaviside(const T& t) {
  return Value(t) >= 0.0 ? T(1.0) : T(0.0);
}

// E_w[H(theta + w)], w ~ N(0, sigma^2), i.e. Phi(theta / sigma).
double HeavisideSmoothed(double theta, double sigma);
// d/dtheta of the above: the N(0, sigma^2) density at theta
double HeavisideSmoothedGradient(double theta, double sigma);

// One-step scalar system with cost H(u).
class HeavisideEnv : public AutoDiffEnv<HeavisideEnv, 1, 1> {
 public:
  std::string name() const override { return "heaviside"; }
  int horizon() const override { return 1; }
  bool smooth_everywhere() const override { return false; }
  bool AtBranchPoint(int h, const Vector& x, const Vector& u) const override;
  Vector DefaultInitialState() const override { return Vector::Zero(1); }

  template <class T>
  State<T> StepT(int /*h*/, const State<T>& x, const Input<T>& /*u*/) const {
    return x;
  }
  template <class T>
  T CostT(int /*h*/, const State<T>& /*x*/, const Input<T>& u) const {
    return Heaviside(u[0]);
  }
};

}  // namespace alphagrad

#endif  // ALPHAGRAD_ENVS_HEAVISIDE_H_
