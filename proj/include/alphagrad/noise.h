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

#ifndef ALPHAGRAD_NOISE_H_
#define ALPHAGRAD_NOISE_H_

#include <cstdint>
#include <limits>
#include <string_view>

#include "alphagrad/types.h"

namespace alphagrad {

// Counter-based random stream. Every (seed, tag, index) triple names an
// independent sequence, so sample i of a batch draws the same noise no
// matter which thread runs it or in which order.
class NoiseStream {
 public:
  using result_type = std::uint64_t;

  NoiseStream(std::uint64_t seed, std::string_view tag, std::uint64_t index);
  explicit NoiseStream(std::uint64_t key) : state_(key) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }
  result_type operator()();

  // standard normal variate
  double Normal();

 private:
  std::uint64_t state_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

std::uint64_t HashTag(std::string_view tag);
std::uint64_t MixSeed(std::uint64_t a, std::uint64_t b);

// Seed for a grid point of a sweep, stable under reordering of the grid.
std::uint64_t DeriveSeed(std::uint64_t seed, std::string_view parameter,
                         double value);

// i.i.d. N(0, sigma^2 I_dim) per step.
class NoiseModel {
 public:
  NoiseModel(double sigma, int dim);

  double sigma() const { return sigma_; }
  int dim() const { return dim_; }

  // dim x steps matrix; column h is the noise of step h
  Matrix Draw(NoiseStream& stream, int steps) const;

  // gradient of |w|^2 / (2 sigma^2)
  Vector Score(const Vector& w) const { return w / (sigma_ * sigma_); }

 private:
  double sigma_;
  int dim_;
};

}  // namespace alphagrad

#endif  // ALPHAGRAD_NOISE_H_
