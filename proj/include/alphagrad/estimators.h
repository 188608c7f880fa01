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

#ifndef ALPHAGRAD_ESTIMATORS_H_
#define ALPHAGRAD_ESTIMATORS_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "alphagrad/env.h"
#include "alphagrad/noise.h"
#include "alphagrad/policy.h"
#include "alphagrad/types.h"

namespace alphagrad {

enum class EstimatorKind { kFirstOrder, kZerothOrder };

// Serial execution is the reference path; the parallel path must agree with
// it bit for bit.
enum class Execution { kSerial, kParallel };

// Per-sample gradient estimates plus their ordered reduction.
struct GradientBatch {
  EstimatorKind kind = EstimatorKind::kFirstOrder;
  std::vector<Vector> per_sample;
  Vector mean;
  // (1 / (N - 1)) sum |g_i - mean|^2
  double emp_var = 0.0;
  // samples whose derivative touched a branch point (first order only)
  int branch_hits = 0;

  int size() const { return static_cast<int>(per_sample.size()); }
  int dim() const { return static_cast<int>(mean.size()); }
  // sqrt(emp_var / N), the total standard error of the mean
  double standard_error() const;
};

// Reduces samples in ascending index order. Requires at least one sample;
// emp_var is 0 for a single sample.
GradientBatch MakeGradientBatch(EstimatorKind kind,
                                std::vector<Vector> per_sample,
                                int branch_hits = 0);

// First-order batched gradient: mean of exact per-sample derivatives of V_1
// with respect to theta. Sample i uses noise stream (seed, "fobg", i).
GradientBatch Fobg(const EnvModel& env, const Policy& policy,
                   const Vector& theta, const Vector& x1, int num_samples,
                   const NoiseModel& noise, std::uint64_t seed,
                   Execution execution = Execution::kParallel);

// Zeroth-order batched gradient:
//   g_i = (V_1(w^i) - b) / sigma^2 * sum_h D_theta pi(x_h^i)^T w_h^i
// with b the zero-noise return when use_baseline is set, else 0. The policy
// Jacobian is evaluated along the noisy trajectory. Sample i uses stream
// (seed, "zobg", i).
GradientBatch Zobg(const EnvModel& env, const Policy& policy,
                   const Vector& theta, const Vector& x1, int num_samples,
                   const NoiseModel& noise, std::uint64_t seed,
                   bool use_baseline,
                   Execution execution = Execution::kParallel);

// sum_i |g_i|^2
double EmpiricalSecondMoment(const GradientBatch& batch);

// max_i |g_i - mean|
double DefaultR(const GradientBatch& batch);

// Radius eps of the vector Bernstein bound: the positive root of
//   N eps^2 / 2 = ln((d + 1) / delta) (second_moment + R eps / 3),
// so that (d + 1) exp(-N eps^2 / 2 / (second_moment + R eps / 3)) = delta.
double BernsteinEpsilon(double second_moment, double R, int num_samples,
                        int dim, double delta);

struct AlphaChoice {
  double alpha = 0.0;
  bool feasible = false;
};

// Closed-form minimiser of a^2 s1 + (1 - a)^2 s0 over a in [0, 1] subject to
// eps + a B <= gamma. Infeasible (eps > gamma) gives alpha = 0. Throws
// DegenerateVarianceError when s0 = s1 = 0.
AlphaChoice InterpolationAlpha(double sig0sq, double sig1sq, double gap,
                               double epsilon, double gamma);

struct AlphaDecision {
  double alpha = 0.0;
  double epsilon = 0.0;
  double gap = 0.0;  // |mean_first - mean_zeroth|
  bool feasible = false;
  bool degenerate = false;  // both empirical variances were zero
  double sig0sq = 0.0;
  double sig1sq = 0.0;
  double gamma = 0.0;
  double delta = 0.0;
  double R = 0.0;
  int num_samples = 0;
  int dim = 0;
};

struct AobgResult {
  Vector gradient;
  AlphaDecision decision;
};

// Alpha-order batched gradient alpha * mean_first + (1 - alpha) * mean_zeroth.
// The batches must come from independent noise streams. R defaults to
// DefaultR(zeroth).
AobgResult Aobg(const GradientBatch& first, const GradientBatch& zeroth,
                double gamma, double delta,
                std::optional<double> R = std::nullopt);

}  // namespace alphagrad

#endif  // ALPHAGRAD_ESTIMATORS_H_
