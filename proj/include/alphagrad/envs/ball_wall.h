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

#ifndef ALPHAGRAD_ENVS_BALL_WALL_H_
#define ALPHAGRAD_ENVS_BALL_WALL_H_

#include <string>
#include <utility>

#include "alphagrad/env.h"

namespace alphagrad {

struct BallWallParams {
  double speed = 10.0;         // launch speed, m/s
  double gravity = 9.81;       // m/s^2
  double wall_distance = 5.0;  // m
  double wall_height = 2.0;    // m
  double initial_angle = 0.58; // rad, on the blocked branch by default
};

// Height of the projectile above the wall top when it reaches the wall.
template <class T>
T BallWallClearance(const T& angle, const BallWallParams& p) {
  using std::cos;
  using std::tan;
  const T c = cos(angle);
  return p.wall_distance * tan(angle) -
         p.gravity * p.wall_distance * p.wall_distance /
             (2.0 * p.speed * p.speed * c * c) -
         p.wall_height;
}

// Negative landing distance of a ball launched at `angle`. The ball lands at
// v^2 sin(2 angle) / g unless it reaches the wall below its top, in which
// case it stops there inelastically (cost -wall_distance, zero slope). A
// ball whose range falls short of the wall never meets it. Defined for all
// real angles so that noisy launches stay well defined. Grazing the top
// (clearance exactly 0) counts as blocked.
template <class T>
T BallWallCostT(const T& angle, const BallWallParams& p) {
  using std::sin;
  const T range = p.speed * p.speed * sin(2.0 * angle) / p.gravity;
  if (Value(range) < p.wall_distance) return -range;
  if (Value(BallWallClearance(angle, p)) > 0.0) return -range;
  return T(-p.wall_distance);
}

// Closed-form landscape on (0, pi/2); DomainError outside.
double BallWallCost(double angle, const BallWallParams& p);
// almost-everywhere derivative; 0 on the blocked branch
double BallWallCostDerivative(double angle, const BallWallParams& p);

// Angles in (0, pi/2) where the clearance crosses zero, from the quadratic in
// tan(angle). Empty when the wall is never cleared.
std::pair<double, double> BallWallClearanceRoots(const BallWallParams& p);

class BallWallEnv : public AutoDiffEnv<BallWallEnv, 1, 1> {
 public:
  explicit BallWallEnv(BallWallParams params = {});

  const BallWallParams& params() const { return params_; }

  std::string name() const override { return "ball_wall"; }
  int horizon() const override { return 1; }
  bool smooth_everywhere() const override { return false; }
  bool AtBranchPoint(int h, const Vector& x, const Vector& u) const override;
  Vector DefaultInitialState() const override { return Vector::Zero(1); }
  Vector DefaultTheta() const override {
    return Vector::Constant(1, params_.initial_angle);
  }

  template <class T>
  State<T> StepT(int /*h*/, const State<T>& x, const Input<T>& /*u*/) const {
    return x;
  }
  template <class T>
  T CostT(int /*h*/, const State<T>& /*x*/, const Input<T>& u) const {
    return BallWallCostT(u[0], params_);
  }

 private:
  BallWallParams params_;
};

}  // namespace alphagrad

#endif  // ALPHAGRAD_ENVS_BALL_WALL_H_
