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

#ifndef ALPHAGRAD_ENVS_TENNIS_H_
#define ALPHAGRAD_ENVS_TENNIS_H_

#include <cmath>
#include <optional>
#include <string>

#include "alphagrad/env.h"

namespace alphagrad {

struct TennisParams {
  double gravity = 9.81;
  double restitution = 0.9;
  double timestep = 0.01;
  int horizon = 200;
  double target_x = 3.0;
  double target_y = 0.0;
  double paddle_half_length = 0.5;
  double input_weight = 1e-3;
  int max_impacts = 4;  // per step
  // ball (x, y, vx, vy) and paddle (x, y) at the start
  double ball_x = 0.0;
  double ball_y = 1.5;
  double ball_vx = 0.5;
  double ball_vy = 0.0;
  double paddle_x = 0.0;
  double paddle_y = 0.0;
};

// Index layout of the tennis state.
enum TennisState {
  kBallX, kBallY, kBallVx, kBallVy,
  kPaddleX, kPaddleY, kPaddleVx, kPaddleVy, kTilt, kTennisStateDim
};

// Smallest s in (0, horizon] with g0 + g1 s + g2 s^2 = 0, the signed gap
// crossing from positive to non-positive. With `touching` the gap is
// exactly zero at s = 0 and only the departing root counts.
std::optional<double> FirstImpactTime(double g0, double g1, double g2,
                                      double horizon, bool touching);

// 2D ball under gravity bouncing off a paddle (a segment with normal
// (-sin tilt, cos tilt)). Inputs are paddle accelerations (2) and tilt rate.
// The paddle velocity and tilt are updated first and held fixed over the
// step, so the gap between ball and paddle line is an exact quadratic in
// time. Impacts are resolved at their time of impact; the impact time is
// recovered on dual numbers by one Newton step from the converged root,
// which carries the implicit-function derivative of the impact time.
class TennisEnv : public AutoDiffEnv<TennisEnv, kTennisStateDim, 3> {
 public:
  explicit TennisEnv(TennisParams params = {});

  const TennisParams& params() const { return params_; }

  std::string name() const override { return "tennis"; }
  int horizon() const override { return params_.horizon; }
  double timestep() const override { return params_.timestep; }
  bool smooth_everywhere() const override { return false; }
  Vector DefaultInitialState() const override;
  Policy DefaultPolicy() const override {
    // features: ball position and velocity, paddle position
    return Policy::LinearFeedback(3, kTennisStateDim, 6);
  }

  template <class T>
  State<T> StepT(int /*h*/, const State<T>& x, const Input<T>& u) const;

  template <class T>
  T CostT(int /*h*/, const State<T>& /*x*/, const Input<T>& u) const {
    return params_.input_weight * (u[0] * u[0] + u[1] * u[1] + u[2] * u[2]);
  }
  template <class T>
  T TerminalCostT(const State<T>& x) const {
    const T ex = x[kBallX] - params_.target_x;
    const T ey = x[kBallY] - params_.target_y;
    return ex * ex + ey * ey;
  }

 private:
  TennisParams params_;
};

template <class T>
typename TennisEnv::State<T> TennisEnv::StepT(int /*h*/, const State<T>& x,
                                             const Input<T>& u) const {
  using std::cos;
  using std::sin;
  const double dt = params_.timestep;
  const double g = params_.gravity;
  const double e = params_.restitution;

  const T pvx = x[kPaddleVx] + dt * u[0];
  const T pvy = x[kPaddleVy] + dt * u[1];
  const T tilt = x[kTilt] + dt * u[2];
  const T nx = -sin(tilt), ny = cos(tilt);
  const T tx = cos(tilt), ty = sin(tilt);

  T bx = x[kBallX], by = x[kBallY], bvx = x[kBallVx], bvy = x[kBallVy];
  T px = x[kPaddleX], py = x[kPaddleY];

  auto advance = [&](const T& s) {
    bx = bx + s * bvx;
    by = by + s * bvy - 0.5 * g * s * s;
    bvy = bvy - g * s;
    px = px + s * pvx;
    py = py + s * pvy;
  };

  T remaining(dt);
  bool touching = false;
  int impacts = 0;
  while (true) {
    const T g0 = nx * (bx - px) + ny * (by - py);
    const T g1 = nx * (bvx - pvx) + ny * (bvy - pvy);
    const T g2 = -0.5 * g * ny;
    const std::optional<double> root = FirstImpactTime(
        Value(g0), Value(g1), Value(g2), Value(remaining), touching);
    if (!root) break;
    T s;
    if (touching) {
      s = -g1 / g2;
    } else {
      const double r = *root;
      s = r - (g0 + g1 * r + g2 * r * r) / (g1 + 2.0 * g2 * r);
    }
    advance(s);
    remaining = remaining - s;
    const T along = tx * (bx - px) + ty * (by - py);
    if (std::abs(Value(along)) > params_.paddle_half_length) break;
    const T vn = nx * (bvx - pvx) + ny * (bvy - pvy);
    if (Value(vn) < 0.0) {
      bvx = bvx - (1.0 + e) * vn * nx;
      bvy = bvy - (1.0 + e) * vn * ny;
    }
    touching = true;
    if (++impacts > params_.max_impacts) {
      throw SubstepOverflow("more than " +
                            std::to_string(params_.max_impacts) +
                            " impacts in one step; reduce the timestep");
    }
  }
  advance(remaining);
  return {bx, by, bvx, bvy, px, py, pvx, pvy, tilt};
}

}  // namespace alphagrad

#endif  // ALPHAGRAD_ENVS_TENNIS_H_
