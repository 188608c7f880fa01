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

#include "alphagrad/envs/momentum_transfer.h"

namespace alphagrad {

MomentumTransferEnv::MomentumTransferEnv(MomentumTransferParams params)
    : params_(params) {
  if (!(params_.half_length > 0) || !(params_.mass > 0) ||
      !(params_.speed > 0)) {
    throw ConfigError("momentum transfer parameters must be positive");
  }
}

bool MomentumTransferEnv::AtBranchPoint(int /*h*/, const Vector& /*x*/,
                                        const Vector& u) const {
  return u[0] == 0.0 || u[0] == params_.half_length;
}

}  // namespace alphagrad
