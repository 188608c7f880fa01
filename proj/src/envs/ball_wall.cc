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

#include "alphagrad/envs/ball_wall.h"

#include <cmath>
#include <numbers>

namespace alphagrad {
namespace {

void CheckParams(const BallWallParams& p) {
  if (!(p.speed > 0) || !(p.gravity > 0) || !(p.wall_distance > 0) ||
      !(p.wall_height >= 0)) {
    throw ConfigError("ball_wall parameters must be positive");
  }
}

void CheckAngle(double angle) {
  if (!(angle > 0.0 && angle < 0.5 * std::numbers::pi)) {
    throw DomainError("launch angle must lie in (0, pi/2)");
  }
}

}  // namespace

double BallWallCost(double angle, const BallWallParams& p) {
  CheckAngle(angle);
  return BallWallCostT(angle, p);
}

double BallWallCostDerivative(double angle, const BallWallParams& p) {
  CheckAngle(angle);
  return BallWallCostT(Dual<1>::Variable(angle, 0), p).tangent()[0];
}

std::pair<double, double> BallWallClearanceRoots(const BallWallParams& p) {
  // clearance = -a t^2 + x_w t - (a + h_w), t = tan(angle),
  // a = g x_w^2 / (2 v^2)
  const double a =
      p.gravity * p.wall_distance * p.wall_distance / (2.0 * p.speed * p.speed);
  const double b = p.wall_distance;
  const double c = a + p.wall_height;
  const double disc = b * b - 4.0 * a * c;
  if (disc <= 0.0) return {NAN, NAN};
  const double s = std::sqrt(disc);
  return {std::atan((b - s) / (2.0 * a)), std::atan((b + s) / (2.0 * a))};
}

BallWallEnv::BallWallEnv(BallWallParams params) : params_(params) {
  CheckParams(params_);
}

bool BallWallEnv::AtBranchPoint(int /*h*/, const Vector& /*x*/,
                                const Vector& u) const {
  const double range = params_.speed * params_.speed * std::sin(2.0 * u[0]) /
                       params_.gravity;
  return range >= params_.wall_distance &&
         BallWallClearance(u[0], params_) == 0.0;
}

}  // namespace alphagrad
