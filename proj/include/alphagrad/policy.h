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

#ifndef ALPHAGRAD_POLICY_H_
#define ALPHAGRAD_POLICY_H_

#include "alphagrad/types.h"

namespace alphagrad {

enum class PolicyKind { kOpenLoop, kLinearFeedback };

// Parametric policy u = pi_h(x, theta). The parameter vector is passed to
// every call; the Policy object only carries structure.
//
// Open loop: theta stacks one m-block per step and pi_h returns block h.
// Linear feedback: u = K [x_obs; 1] with theta the row-major flattening of
// K (m x (k+1)), where x_obs is the first k coordinates of the state
// (k = n unless a smaller observed dimension is given).
class Policy {
 public:
  static Policy OpenLoop(int input_dim, int horizon);
  static Policy LinearFeedback(int input_dim, int state_dim,
                               int observed_dim = -1);

  PolicyKind kind() const { return kind_; }
  int input_dim() const { return input_dim_; }
  int state_dim() const { return state_dim_; }
  int param_dim() const { return param_dim_; }
  int observed_dim() const { return observed_dim_; }
  int horizon() const { return horizon_; }

  // h is the 0-based step index
  Vector Eval(int h, const Vector& x, const Vector& theta) const;
  // m x d
  Matrix JacobianTheta(int h, const Vector& x, const Vector& theta) const;
  // m x n
  Matrix JacobianState(int h, const Vector& x, const Vector& theta) const;

  // throws ConfigError on mismatched theta / state dimensions
  void CheckDims(const Vector& theta, int state_dim) const;

 private:
  Policy(PolicyKind kind, int input_dim, int state_dim, int observed_dim,
         int horizon, int param_dim);
  // std::out_of_range when an open-loop step lies outside the horizon
  void CheckStep(int h) const;

  PolicyKind kind_;
  int input_dim_;
  int state_dim_;  // -1 for open loop (any state)
  int observed_dim_;
  int horizon_;  // -1 for feedback (any horizon)
  int param_dim_;
};

}  // namespace alphagrad

#endif  // ALPHAGRAD_POLICY_H_
