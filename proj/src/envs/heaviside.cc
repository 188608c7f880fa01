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

#include "alphagrad/envs/heaviside.h"

#include <cmath>
#include <numbers>

namespace alphagrad {

double HeavisideSmoothed(double theta, double sigma) {
  if (!(sigma > 0.0)) throw DomainError("sigma must be positive");
  return 0.5 * std::erfc(-theta / (sigma * std::numbers::sqrt2));
}

double HeavisideSmoothedGradient(double theta, double sigma) {
  if (!(sigma > 0.0)) throw DomainError("sigma must be positive");
  const double z = theta / sigma;
  return std::exp(-0.5 * z * z) / (sigma * std::sqrt(2.0 * std::numbers::pi));
}

bool HeavisideEnv::AtBranchPoint(int /*h*/, const Vector& /*x*/,
                                 const Vector& u) const {
  return u[0] == 0.0;
}

}  // namespace alphagrad
