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

#include "alphagrad/policy.h"

#include <stdexcept>
#include <string>

namespace alphagrad {

Policy::Policy(PolicyKind kind, int input_dim, int state_dim, int observed_dim,
               int horizon, int param_dim)
    : kind_(kind),
      input_dim_(input_dim),
      state_dim_(state_dim),
      observed_dim_(observed_dim),
      horizon_(horizon),
      param_dim_(param_dim) {}

Policy Policy::OpenLoop(int input_dim, int horizon) {
  if (input_dim < 1 || horizon < 1) {
    throw ConfigError("open-loop policy needs positive input dim and horizon");
  }
  return Policy(PolicyKind::kOpenLoop, input_dim, -1, 0, horizon,
                input_dim * horizon);
}

Policy Policy::LinearFeedback(int input_dim, int state_dim, int observed_dim) {
  if (observed_dim < 0) observed_dim = state_dim;
  if (input_dim < 1 || state_dim < 1 || observed_dim > state_dim) {
    throw ConfigError("invalid linear-feedback policy dimensions");
  }
  return Policy(PolicyKind::kLinearFeedback, input_dim, state_dim,
                observed_dim, -1, input_dim * (observed_dim + 1));
}

void Policy::CheckDims(const Vector& theta, int state_dim) const {
  if (theta.size() != param_dim_) {
    throw ConfigError("theta has dimension " + std::to_string(theta.size()) +
                      ", policy expects " + std::to_string(param_dim_));
  }
  if (kind_ == PolicyKind::kLinearFeedback && state_dim != state_dim_) {
    throw ConfigError("policy expects state dimension " +
                      std::to_string(state_dim_) + ", got " +
                      std::to_string(state_dim));
  }
}

void Policy::CheckStep(int h) const {
  if (kind_ == PolicyKind::kOpenLoop && (h < 0 || h >= horizon_)) {
    throw std::out_of_range("step " + std::to_string(h) +
                            " outside open-loop horizon " +
                            std::to_string(horizon_));
  }
}

Vector Policy::Eval(int h, const Vector& x, const Vector& theta) const {
  if (kind_ == PolicyKind::kOpenLoop) {
    CheckStep(h);
    return theta.segment(h * input_dim_, input_dim_);
  }
  const int cols = observed_dim_ + 1;
  Vector u(input_dim_);
  for (int i = 0; i < input_dim_; ++i) {
    double acc = theta[i * cols + observed_dim_];
    for (int j = 0; j < observed_dim_; ++j) acc += theta[i * cols + j] * x[j];
    u[i] = acc;
  }
  return u;
}

Matrix Policy::JacobianTheta(int h, const Vector& x,
                             const Vector& /*theta*/) const {
  Matrix jac = Matrix::Zero(input_dim_, param_dim_);
  if (kind_ == PolicyKind::kOpenLoop) {
    CheckStep(h);
    jac.block(0, h * input_dim_, input_dim_, input_dim_).setIdentity();
    return jac;
  }
  const int cols = observed_dim_ + 1;
  for (int i = 0; i < input_dim_; ++i) {
    for (int j = 0; j < observed_dim_; ++j) jac(i, i * cols + j) = x[j];
    jac(i, i * cols + observed_dim_) = 1.0;
  }
  return jac;
}

Matrix Policy::JacobianState(int /*h*/, const Vector& x,
                             const Vector& theta) const {
  Matrix jac = Matrix::Zero(input_dim_, x.size());
  if (kind_ == PolicyKind::kOpenLoop) return jac;
  const int cols = observed_dim_ + 1;
  for (int i = 0; i < input_dim_; ++i) {
    for (int j = 0; j < observed_dim_; ++j) jac(i, j) = theta[i * cols + j];
  }
  return jac;
}

}  // namespace alphagrad
