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

#include "alphagrad/envs/coulomb.h"

#include <cmath>

namespace alphagrad {
namespace {

void CheckNu(double nu) {
  if (!(nu > 0.0) || !std::isfinite(nu)) {
    throw DomainError("slip tolerance must be positive");
  }
}

}  // namespace

double CoulombRelaxed(double t, double nu) {
  CheckNu(nu);
  return RelaxedStep(t, nu);
}

double CoulombRelaxedDerivative(double t, double nu) {
  CheckNu(nu);
  return RelaxedStep(Dual<1>::Variable(t, 0), nu).tangent()[0];
}

CoulombEnv::CoulombEnv(double slip_tolerance) : nu_(slip_tolerance) {
  CheckNu(nu_);
}

bool CoulombEnv::AtBranchPoint(int /*h*/, const Vector& /*x*/,
                               const Vector& u) const {
  return std::abs(u[0]) == 0.5 * nu_;
}

}  // namespace alphagrad
