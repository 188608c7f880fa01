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

#include "alphagrad/envs/friction.h"

#include <cmath>

namespace alphagrad {

FrictionEnv::FrictionEnv(FrictionParams params) : params_(params) {
  if (!(params_.slip_tolerance > 0)) {
    throw DomainError("slip tolerance must be positive");
  }
  if (!(params_.carrier_mass > 0) || !(params_.box_mass > 0) ||
      !(params_.timestep > 0) || params_.horizon < 1 ||
      !(params_.half_length > 0)) {
    throw ConfigError("invalid friction parameters");
  }
}

bool FrictionEnv::AtBranchPoint(int /*h*/, const Vector& x,
                                const Vector& /*u*/) const {
  return std::abs(x[2] - x[0]) == params_.half_length ||
         std::abs(x[1] - x[3]) == 0.5 * params_.slip_tolerance;
}

}  // namespace alphagrad
