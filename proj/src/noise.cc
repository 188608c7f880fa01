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

#include "alphagrad/noise.h"

#include <bit>
#include <cmath>
#include <cstring>
#include <string>

namespace alphagrad {
namespace {

std::uint64_t SplitMix(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t HashTag(std::string_view tag) {
  // FNV-1a
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : tag) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t MixSeed(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2));
  return SplitMix(s);
}

std::uint64_t DeriveSeed(std::uint64_t seed, std::string_view parameter,
                         double value) {
  return MixSeed(MixSeed(seed, HashTag(parameter)),
                 std::bit_cast<std::uint64_t>(value));
}

NoiseStream::NoiseStream(std::uint64_t seed, std::string_view tag,
                         std::uint64_t index)
    : state_(MixSeed(MixSeed(seed, HashTag(tag)), index)) {}

NoiseStream::result_type NoiseStream::operator()() { return SplitMix(state_); }

double NoiseStream::Normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  // Marsaglia polar method on 53-bit uniforms
  double u, v, s;
  do {
    u = 2.0 * (static_cast<double>((*this)() >> 11) * 0x1.0p-53) - 1.0;
    v = 2.0 * (static_cast<double>((*this)() >> 11) * 0x1.0p-53) - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  const double f = std::sqrt(-2.0 * std::log(s) / s);
  spare_ = v * f;
  has_spare_ = true;
  return u * f;
}

NoiseModel::NoiseModel(double sigma, int dim) : sigma_(sigma), dim_(dim) {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw DomainError("noise sigma must be positive, got " +
                      std::to_string(sigma));
  }
  if (dim < 1) throw ConfigError("noise dimension must be positive");
}

Matrix NoiseModel::Draw(NoiseStream& stream, int steps) const {
  Matrix w(dim_, steps);
  for (int h = 0; h < steps; ++h) {
    for (int i = 0; i < dim_; ++i) w(i, h) = sigma_ * stream.Normal();
  }
  return w;
}

}  // namespace alphagrad
