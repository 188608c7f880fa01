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

#include "alphagrad/envs/pushing.h"

namespace alphagrad {

PushingEnv::PushingEnv(PushingParams params) : params_(params) {
  if (!(params_.mass1 > 0) || !(params_.mass2 > 0) ||
      !(params_.timestep > 0) || params_.horizon < 1 ||
      !(params_.stiffness >= 0) || !(params_.damping >= 0)) {
    throw ConfigError("invalid pushing parameters");
  }
}

Vector PushingEnv::DefaultInitialState() const {
  Vector x(4);
  x << params_.initial_position1, 0.0, params_.initial_position2, 0.0;
  return x;
}

bool PushingEnv::AtBranchPoint(int /*h*/, const Vector& x,
                               const Vector& /*u*/) const {
  return (x[2] - params_.half_width2) - (x[0] + params_.half_width1) == 0.0;
}

}  // namespace alphagrad
