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

#include "alphagrad/envs/double_pendulum.h"

namespace alphagrad {

double DoublePendulumEnergy(const std::array<double, 4>& q,
                            const DoublePendulumParams& p) {
  const double m1 = p.mass1, m2 = p.mass2, l1 = p.length1, l2 = p.length2;
  const double kinetic =
      0.5 * (m1 + m2) * l1 * l1 * q[2] * q[2] +
      0.5 * m2 * l2 * l2 * q[3] * q[3] +
      m2 * l1 * l2 * q[2] * q[3] * std::cos(q[0] - q[1]);
  const double potential = -(m1 + m2) * p.gravity * l1 * std::cos(q[0]) -
                           m2 * p.gravity * l2 * std::cos(q[1]);
  return kinetic + potential;
}

Matrix DoublePendulumStepJacobian(const std::array<double, 4>& q,
                                  const DoublePendulumParams& p) {
  using D = Dual<4>;
  std::array<D, 4> qd;
  for (int i = 0; i < 4; ++i) qd[i] = D::Variable(q[i], i);
  const auto next = DoublePendulumRk4Step(qd, p);
  Matrix jac(4, 4);
  for (int i = 0; i < 4; ++i) jac.row(i) = next[i].tangent().transpose();
  return jac;
}

DoublePendulumEnv::DoublePendulumEnv(DoublePendulumParams params)
    : params_(params) {
  if (!(params_.mass1 > 0) || !(params_.mass2 > 0) ||
      !(params_.length1 > 0) || !(params_.length2 > 0) ||
      !(params_.timestep > 0) || params_.horizon < 1) {
    throw ConfigError("invalid double pendulum parameters");
  }
}

Vector DoublePendulumEnv::DefaultInitialState() const {
  Vector x(4);
  x << params_.initial_angles[0], params_.initial_angles[1],
      params_.initial_velocities[0], params_.initial_velocities[1];
  return x;
}

Vector DoublePendulumEnv::DefaultTheta() const {
  Vector theta(2);
  theta << params_.initial_angles[0], params_.initial_angles[1];
  return theta;
}

}  // namespace alphagrad
