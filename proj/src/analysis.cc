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

#include "alphagrad/analysis.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "alphagrad/parallel.h"
#include "alphagrad/rollout.h"

namespace alphagrad {

double EmpiricalBiasSpec::Delta0() const {
  return std::max(0.0, (1.0 - beta) * delta_gap - beta * mean_norm);
}

double EmpiricalBiasVarianceBound(const EmpiricalBiasSpec& spec) {
  if (!(spec.beta > 0.0 && spec.beta < 1.0)) {
    throw DomainError("beta must lie in (0, 1)");
  }
  const double d0 = spec.Delta0();
  return d0 * d0 / spec.beta;
}

double ZobgVarianceBound(const BoundInputs& bounds, int horizon, int noise_dim,
                         double sigma, int num_samples) {
  if (!(bounds.value_bound > 0) || !(bounds.policy_jacobian_bound > 0) ||
      horizon < 1 || noise_dim < 1 || !(sigma > 0) || num_samples < 1) {
    throw DomainError("variance bound inputs must be positive");
  }
  const double bv = bounds.value_bound;
  const double bp = bounds.policy_jacobian_bound;
  return bv * bv * bp * bp * horizon * noise_dim /
         (num_samples * sigma * sigma);
}

double StandardNormalCdf(double z) {
  return 0.5 * std::erfc(-z / std::numbers::sqrt2);
}

double FobgZeroBatchProbability(double theta, double nu, double sigma,
                                int num_samples) {
  if (!(nu > 0) || !(sigma > 0)) {
    throw DomainError("nu and sigma must be positive");
  }
  const double p_lin = StandardNormalCdf((0.5 * nu - theta) / sigma) -
                       StandardNormalCdf((-0.5 * nu - theta) / sigma);
  return std::pow(1.0 - p_lin, num_samples);
}

ReinforceForms ReinforceFormsCheck(const EnvModel& env, const Policy& policy,
                                   const Vector& theta, const Vector& x1,
                                   int num_samples, const NoiseModel& noise,
                                   std::uint64_t seed, bool use_baseline,
                                   Execution execution) {
  if (num_samples < 1000) {
    throw ConfigError("reinforce forms check needs at least 1000 samples");
  }
  const int horizon = env.horizon();
  const double inv_var = 1.0 / (noise.sigma() * noise.sigma());

  // baseline value-to-go from every step of the noiseless rollout
  std::vector<double> base(horizon, 0.0);
  if (use_baseline) {
    const Trajectory nominal = Rollout(
        env, policy, theta, x1, Matrix::Zero(env.input_dim(), horizon));
    for (int h = 0; h < horizon; ++h) base[h] = ValueToGo(nominal, h + 1);
  }

  struct Pair {
    Vector per_step;
    Vector total;
  };
  auto pairs = ForEachSample<Pair>(num_samples, execution, [&](int i) {
    NoiseStream stream(seed, "reinforce", static_cast<std::uint64_t>(i));
    const Matrix w = noise.Draw(stream, horizon);
    const Trajectory traj = Rollout(env, policy, theta, x1, w);
    Pair p{Vector::Zero(policy.param_dim()), Vector::Zero(policy.param_dim())};
    // suffix sums give V_h in one pass
    double to_go = 0.0;
    for (int h = horizon - 1; h >= 0; --h) {
      to_go += traj.step_costs[h];
      const Vector score =
          policy.JacobianTheta(h, traj.states[h], theta).transpose() * w.col(h);
      p.per_step += (to_go - base[h]) * score;
      p.total += score;
    }
    p.per_step *= inv_var;
    p.total *= (traj.total_cost - base[0]) * inv_var;
    return p;
  });

  const int d = policy.param_dim();
  ReinforceForms out;
  out.mean_per_step = Vector::Zero(d);
  out.mean_total = Vector::Zero(d);
  Vector diff_mean = Vector::Zero(d);
  for (const Pair& p : pairs) {
    out.mean_per_step += p.per_step;
    out.mean_total += p.total;
    diff_mean += p.per_step - p.total;
    out.max_sample_difference =
        std::max(out.max_sample_difference, (p.per_step - p.total).norm());
  }
  out.mean_per_step /= num_samples;
  out.mean_total /= num_samples;
  diff_mean /= num_samples;
  double ss = 0.0;
  for (const Pair& p : pairs) {
    ss += (p.per_step - p.total - diff_mean).squaredNorm();
  }
  out.discrepancy = diff_mean.norm();
  out.discrepancy_stderr =
      std::sqrt(ss / (num_samples - 1.0) / num_samples);
  return out;
}

SweepResult VarianceSweep(const std::function<SweepCase(double)>& make_case,
                          const std::string& parameter,
                          const std::vector<double>& grid,
                          const SweepSettings& settings) {
  if (grid.empty()) throw ConfigError("sweep grid is empty", "grid");
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) {
      throw ConfigError("sweep grid must be strictly increasing", "grid");
    }
  }
  if (settings.zero_batch_size < 1) {
    throw ConfigError("zero_batch_size must be positive", "zero_batch_size");
  }

  SweepResult result;
  result.parameter = parameter;
  result.grid = grid;
  for (double value : grid) {
    SweepRecord rec;
    rec.value = value;
    const SweepCase c = make_case(value);
    const std::uint64_t seed = DeriveSeed(settings.seed, parameter, value);
    const NoiseModel noise(c.sigma, c.env->input_dim());
    try {
      const GradientBatch first = Fobg(*c.env, c.policy, c.theta, c.x1,
                                       c.num_samples, noise, seed,
                                       settings.execution);
      const GradientBatch zeroth =
          Zobg(*c.env, c.policy, c.theta, c.x1, c.num_samples, noise, seed,
               settings.use_baseline, settings.execution);
      rec.var_fobg = first.emp_var;
      rec.var_zobg = zeroth.emp_var;
      rec.mean_fobg = first.mean;
      rec.mean_zobg = zeroth.mean;
      rec.mean_gap = (first.mean - zeroth.mean).norm();
      const int size = settings.zero_batch_size;
      const int batches = first.size() / size;
      int zero = 0;
      for (int b = 0; b < batches; ++b) {
        bool all_zero = true;
        for (int i = b * size; i < (b + 1) * size && all_zero; ++i) {
          all_zero = first.per_sample[i].isZero(0.0);
        }
        zero += all_zero ? 1 : 0;
      }
      rec.zero_batch_rate =
          batches > 0 ? static_cast<double>(zero) / batches : NAN;
    } catch (const DivergedRollout& e) {
      rec.diverged = true;
      rec.error = e.what();
      rec.var_fobg = rec.var_zobg = rec.zero_batch_rate = rec.mean_gap = NAN;
    }
    result.records.push_back(std::move(rec));
  }
  return result;
}

}  // namespace alphagrad
