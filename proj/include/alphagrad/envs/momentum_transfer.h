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

#ifndef ALPHAGRAD_ENVS_MOMENTUM_TRANSFER_H_
#define ALPHAGRAD_ENVS_MOMENTUM_TRANSFER_H_

#include <string>

#include "alphagrad/env.h"

namespace alphagrad {

struct MomentumTransferParams {
  double half_length = 1.0;   // bar half-length L, m
  double mass = 1.0;          // ball mass, kg
  double speed = 5.0;         // approach speed, m/s
  double miss_penalty = 10.0; // cost when the ball misses the bar
  double initial_offset = 0.9;
};

// Cost of striking the pivoting bar at offset theta from the pivot: minus the
// transferred angular momentum on [0, L], a flat penalty otherwise. Both ends
// of [0, L] belong to the hit branch.
template <class T>
T MomentumTransferCostT(const T& offset, const MomentumTransferParams& p) {
  const double v = Value(offset);
  if (v >= 0.0 && v <= p.half_length) return -p.mass * p.speed * offset;
  return T(p.miss_penalty);
}

class MomentumTransferEnv : public AutoDiffEnv<MomentumTransferEnv, 1, 1> {
 public:
  explicit MomentumTransferEnv(MomentumTransferParams params = {});

  const MomentumTransferParams& params() const { return params_; }

  std::string name() const override { return "momentum"; }
  int horizon() const override { return 1; }
  bool smooth_everywhere() const override { return false; }
  bool AtBranchPoint(int h, const Vector& x, const Vector& u) const override;
  Vector DefaultInitialState() const override { return Vector::Zero(1); }
  Vector DefaultTheta() const override {
    return Vector::Constant(1, params_.initial_offset);
  }

  template <class T>
  State<T> StepT(int /*h*/, const State<T>& x, const Input<T>& /*u*/) const {
    return x;
  }
  template <class T>
  T CostT(int /*h*/, const State<T>& /*x*/, const Input<T>& u) const {
    return MomentumTransferCostT(u[0], params_);
  }

 private:
  MomentumTransferParams params_;
};

}  // namespace alphagrad

#endif  // ALPHAGRAD_ENVS_MOMENTUM_TRANSFER_H_
