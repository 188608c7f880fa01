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

#ifndef ALPHAGRAD_ANALYSIS_H_
#define ALPHAGRAD_ANALYSIS_H_

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "alphagrad/env.h"
#include "alphagrad/estimators.h"
#include "alphagrad/noise.h"
#include "alphagrad/policy.h"

namespace alphagrad {

// A batch-mean random vector z that equals its conditional mean up to
// delta_gap on an event of probability 1 - beta.
struct EmpiricalBiasSpec {
  double beta = 0.5;
  double delta_gap = 0.0;
  double S = 0.0;
  double mean_norm = 0.0;  // |E z|

  // max{0, (1 - beta) delta_gap - beta mean_norm}
  double Delta0() const;
};

// Lower bound Delta0^2 / beta on Var[z]. DomainError unless beta in (0, 1).
double EmpiricalBiasVarianceBound(const EmpiricalBiasSpec& spec);

struct BoundInputs {
  double value_bound = 1.0;            // |V_1| <= value_bound
  double policy_jacobian_bound = 1.0;  // |D_theta pi| <= this (operator norm)
};

// B_V^2 B_pi^2 H n / (N sigma^2): variance bound of the zeroth-order batch
// mean, n being the noise dimension per step.
double ZobgVarianceBound(const BoundInputs& bounds, int horizon, int noise_dim,
                         double sigma, int num_samples);

double StandardNormalCdf(double z);

// Probability that all N first-order samples on the relaxed Coulomb step are
// exactly zero: (1 - p_lin)^N with p_lin = P[theta + w in (-nu/2, nu/2)].
double FobgZeroBatchProbability(double theta, double nu, double sigma,
                                int num_samples);

struct ReinforceForms {
  // sum_h D_theta pi^T w_h V_h / sigma^2 (value-to-go weighting)
  Vector mean_per_step;
  // V_1 sum_h D_theta pi^T w_h / sigma^2 (total-return weighting)
  Vector mean_total;
  // |mean_per_step - mean_total| and the standard error of that difference
  double discrepancy = 0.0;
  double discrepancy_stderr = 0.0;
  // max over samples of |per_step_i - total_i|
  double max_sample_difference = 0.0;
};

// Evaluates both score-function forms on the same N samples (stream
// (seed, "reinforce", i)). With use_baseline, V_h is replaced by V_h minus
// the zero-noise value-to-go from h, and V_1 by V_1 minus the zero-noise
// return. Requires N >= 1000.
ReinforceForms ReinforceFormsCheck(const EnvModel& env, const Policy& policy,
                                   const Vector& theta, const Vector& x1,
                                   int num_samples, const NoiseModel& noise,
                                   std::uint64_t seed,
                                   bool use_baseline = false,
                                   Execution execution = Execution::kParallel);

// One grid point of a sweep: what to estimate and how many samples to draw.
struct SweepCase {
  std::shared_ptr<const EnvModel> env;
  Policy policy;
  Vector theta;
  Vector x1;
  int num_samples = 1000;
  double sigma = 1.0;
};

struct SweepSettings {
  bool use_baseline = true;
  std::uint64_t seed = 0;
  // first-order samples are grouped into consecutive batches of this size to
  // count all-zero batches
  int zero_batch_size = 4;
  Execution execution = Execution::kParallel;
};

struct SweepRecord {
  double value = 0.0;
  double var_fobg = 0.0;  // total empirical variance of per-sample gradients
  double var_zobg = 0.0;
  Vector mean_fobg;
  Vector mean_zobg;
  double zero_batch_rate = 0.0;
  double mean_gap = 0.0;
  bool diverged = false;
  std::string error;
};

struct SweepResult {
  std::string parameter;
  std::vector<double> grid;
  std::vector<SweepRecord> records;  // keyed by grid index
};

// Runs both estimators at every grid value. Seeds derive from
// (seed, parameter, value) so each row reproduces on its own. A diverged
// rollout marks its row instead of aborting the sweep.
SweepResult VarianceSweep(const std::function<SweepCase(double)>& make_case,
                          const std::string& parameter,
                          const std::vector<double>& grid,
                          const SweepSettings& settings);

}  // namespace alphagrad

#endif  // ALPHAGRAD_ANALYSIS_H_
