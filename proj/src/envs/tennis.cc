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

#include "alphagrad/envs/tennis.h"

#include <algorithm>

namespace alphagrad {

std::optional<double> FirstImpactTime(double g0, double g1, double g2,
                                      double horizon, bool touching) {
  if (touching) {
    // gap = s (g1 + g2 s); departing root at -g1 / g2
    if (g1 <= 0.0 || g2 >= 0.0) return std::nullopt;
    const double s = -g1 / g2;
    if (s > horizon) return std::nullopt;
    return s;
  }
  if (g0 <= 0.0) return std::nullopt;

  double best = horizon + 1.0;
  if (g2 == 0.0) {
    if (g1 < 0.0) best = -g0 / g1;
  } else {
    const double disc = g1 * g1 - 4.0 * g2 * g0;
    if (disc < 0.0) return std::nullopt;
    const double q = -0.5 * (g1 + std::copysign(std::sqrt(disc), g1));
    for (double r : {q / g2, q != 0.0 ? g0 / q : -1.0}) {
      if (r > 0.0) best = std::min(best, r);
    }
  }
  if (best > horizon) return std::nullopt;
  // polish against cancellation
  for (int i = 0; i < 2; ++i) {
    const double slope = g1 + 2.0 * g2 * best;
    if (slope == 0.0) break;
    best -= (g0 + g1 * best + g2 * best * best) / slope;
  }
  return std::clamp(best, 0.0, horizon);
}

TennisEnv::TennisEnv(TennisParams params) : params_(params) {
  if (!(params_.restitution > 0.0 && params_.restitution <= 1.0)) {
    throw ConfigError("restitution must lie in (0, 1]");
  }
  if (!(params_.timestep > 0) || params_.horizon < 1 ||
      !(params_.paddle_half_length > 0) || params_.max_impacts < 1) {
    throw ConfigError("invalid tennis parameters");
  }
}

Vector TennisEnv::DefaultInitialState() const {
  Vector x = Vector::Zero(kTennisStateDim);
  x[kBallX] = params_.ball_x;
  x[kBallY] = params_.ball_y;
  x[kBallVx] = params_.ball_vx;
  x[kBallVy] = params_.ball_vy;
  x[kPaddleX] = params_.paddle_x;
  x[kPaddleY] = params_.paddle_y;
  return x;
}

}  // namespace alphagrad
