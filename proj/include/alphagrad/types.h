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

#ifndef ALPHAGRAD_TYPES_H_
#define ALPHAGRAD_TYPES_H_

#include <stdexcept>
#include <string>
#include <utility>

#include <Eigen/Core>

namespace alphagrad {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

// Inconsistent dimensions or invalid settings. `key` names the offending
// configuration field when there is one.
class ConfigError : public std::invalid_argument {
 public:
  explicit ConfigError(const std::string& what, std::string key = "")
      : std::invalid_argument(what), key_(std::move(key)) {}

  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A rollout produced a non-finite state. `step` is the 1-based step index at
// which the blow-up was observed; `sample` is the batch index, or -1 when the
// rollout was not part of a batch.
class DivergedRollout : public std::runtime_error {
 public:
  DivergedRollout(int step, int sample = -1)
      : std::runtime_error(Describe(step, sample)),
        step_(step),
        sample_(sample) {}

  int step() const { return step_; }
  int sample() const { return sample_; }

  DivergedRollout WithSample(int sample) const {
    return DivergedRollout(step_, sample);
  }

 private:
  static std::string Describe(int step, int sample) {
    std::string msg = "rollout diverged at step " + std::to_string(step);
    if (sample >= 0) msg += " (sample " + std::to_string(sample) + ")";
    return msg;
  }

  int step_;
  int sample_;
};

// Both empirical variances are zero, so inverse-variance weighting is
// undefined.
class DegenerateVarianceError : public std::domain_error {
 public:
  DegenerateVarianceError()
      : std::domain_error("both empirical variances are zero") {}
};

// More contact events inside one time step than the integrator resolves.
class SubstepOverflow : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace alphagrad

#endif  // ALPHAGRAD_TYPES_H_
