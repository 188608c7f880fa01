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

#ifndef ALPHAGRAD_ENVS_COULOMB_H_
#define ALPHAGRAD_ENVS_COULOMB_H_

#include <string>

#include "alphagrad/env.h"

namespace alphagrad {

// Continuous relaxation of the unit step with slip tolerance nu:
// clamp(t / nu + 1/2, 0, 1). At the kinks t = +-nu/2 the flat branch is
// taken, so the derivative there is 0. Callers validate nu > 0.
template <class T>
T RelaxedStep(const T& t, double nu) {
  if (Value(t) <= -0.5 * nu) return T(0.0);
  if (Value(t) >= 0.5 * nu) return T(1.0);
  return t / nu + 0.5;
}

// odd relaxation of sign(t): 2 * RelaxedStep(t) - 1
template <class T>
T RelaxedSign(const T& t, double nu) {
  return 2.0 * RelaxedStep(t, nu) - 1.0;
}

double CoulombRelaxed(double t, double nu);
double CoulombRelaxedDerivative(double t, double nu);

// One-step scalar system with cost RelaxedStep(u, nu).
class CoulombEnv : public AutoDiffEnv<CoulombEnv, 1, 1> {
 public:
  explicit CoulombEnv(double slip_tolerance);

  double slip_tolerance() const { return nu_; }

  std::string name() const override { return "coulomb"; }
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
    return RelaxedStep(u[0], nu_);
  }

 private:
  double nu_;
};

}  // namespace alphagrad

#endif  // ALPHAGRAD_ENVS_COULOMB_H_
