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

#ifndef ALPHAGRAD_ENVS_DOUBLE_PENDULUM_H_
#define ALPHAGRAD_ENVS_DOUBLE_PENDULUM_H_

#include <array>
#include <cmath>
#include <string>

#include "alphagrad/env.h"

namespace alphagrad {

struct DoublePendulumParams {
  double mass1 = 1.0;
  double mass2 = 1.0;
  double length1 = 1.0;
  double length2 = 1.0;
  double gravity = 9.81;
  double timestep = 0.01;
  int horizon = 100;  // number of integration steps
  std::array<double, 4> goal = {0.0, 0.0, 0.0, 0.0};
  std::array<double, 2> initial_angles = {2.0, 2.0};
  std::array<double, 2> initial_velocities = {0.0, 0.0};
};

// q = (angle1, angle2, rate1, rate2), angles from the downward vertical.
template <class T>
std::array<T, 4> DoublePendulumDerivative(const std::array<T, 4>& q,
                                          const DoublePendulumParams& p) {
  using std::cos;
  using std::sin;
  const double m1 = p.mass1, m2 = p.mass2, l1 = p.length1, l2 = p.length2;
  const T delta = q[0] - q[1];
  const T c = cos(delta);
  const T s = sin(delta);
  // mass matrix [[a, b], [b, e]] and generalized forces (r1, r2)
  const double a = (m1 + m2) * l1 * l1;
  const T b = m2 * l1 * l2 * c;
  const double e = m2 * l2 * l2;
  const T r1 = -m2 * l1 * l2 * s * q[3] * q[3] -
               (m1 + m2) * p.gravity * l1 * sin(q[0]);
  const T r2 = m2 * l1 * l2 * s * q[2] * q[2] - m2 * p.gravity * l2 * sin(q[1]);
  const T det = a * e - b * b;
  return {q[2], q[3], (e * r1 - b * r2) / det, (a * r2 - b * r1) / det};
}

template <class T>
std::array<T, 4> DoublePendulumRk4Step(const std::array<T, 4>& q,
                                       const DoublePendulumParams& p) {
  const double dt = p.timestep;
  auto axpy = [](const std::array<T, 4>& x, double s,
                 const std::array<T, 4>& k) {
    std::array<T, 4> out;
    for (int i = 0; i < 4; ++i) out[i] = x[i] + s * k[i];
    return out;
  };
  const auto k1 = DoublePendulumDerivative(q, p);
  const auto k2 = DoublePendulumDerivative(axpy(q, 0.5 * dt, k1), p);
  const auto k3 = DoublePendulumDerivative(axpy(q, 0.5 * dt, k2), p);
  const auto k4 = DoublePendulumDerivative(axpy(q, dt, k3), p);
  std::array<T, 4> out;
  for (int i = 0; i < 4; ++i) {
    out[i] = q[i] + (dt / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  }
  return out;
}

double DoublePendulumEnergy(const std::array<double, 4>& q,
                            const DoublePendulumParams& p);
// d q' / d q of one RK4 step, row-major 4 x 4, via dual numbers
Matrix DoublePendulumStepJacobian(const std::array<double, 4>& q,
                                  const DoublePendulumParams& p);

// Chaos benchmark. The decision is the initial pair of angles: a single
// control step places the pendulum at (u, rates of x) and integrates
// `horizon` RK4 steps, after which the terminal cost |q_H - q_goal|^2 is
// charged. The noise therefore perturbs the initial position.
class DoublePendulumEnv : public AutoDiffEnv<DoublePendulumEnv, 4, 2> {
 public:
  explicit DoublePendulumEnv(DoublePendulumParams params = {});

  const DoublePendulumParams& params() const { return params_; }

  std::string name() const override { return "pendulum"; }
  int horizon() const override { return 1; }
  double timestep() const override { return params_.timestep; }
  bool smooth_everywhere() const override { return true; }
  Vector DefaultInitialState() const override;
  Vector DefaultTheta() const override;

  template <class T>
  State<T> StepT(int /*h*/, const State<T>& x, const Input<T>& u) const {
    State<T> q = {u[0], u[1], x[2], x[3]};
    for (int i = 0; i < params_.horizon; ++i) {
      q = DoublePendulumRk4Step(q, params_);
      if (!std::isfinite(Value(q[0])) || !std::isfinite(Value(q[1]))) break;
    }
    return q;
  }
  template <class T>
  T CostT(int /*h*/, const State<T>& /*x*/, const Input<T>& /*u*/) const {
    return T(0.0);
  }
  template <class T>
  T TerminalCostT(const State<T>& q) const {
    T total(0.0);
    for (int i = 0; i < 4; ++i) {
      const T e = q[i] - params_.goal[i];
      total += e * e;
    }
    return total;
  }

 private:
  DoublePendulumParams params_;
};

}  // namespace alphagrad

#endif  // ALPHAGRAD_ENVS_DOUBLE_PENDULUM_H_
