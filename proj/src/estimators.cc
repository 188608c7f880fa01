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

#include "alphagrad/estimators.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "alphagrad/parallel.h"
#include "alphagrad/rollout.h"

namespace alphagrad {
namespace {

void CheckBatchSize(int num_samples) {
  if (num_samples < 2) {
    throw ConfigError("a gradient batch needs at least 2 samples, got " +
                      std::to_string(num_samples));
  }
}

void CheckNoise(const EnvModel& env, const NoiseModel& noise) {
  if (noise.dim() != env.input_dim()) {
    throw ConfigError("noise dimension does not match env input dimension");
  }
}

// Finite samples can still overflow the mean or variance; blame the largest.
void CheckBatchFinite(const GradientBatch& batch, int horizon) {
  if (batch.mean.allFinite() && std::isfinite(batch.emp_var)) return;
  int worst = 0;
  for (int i = 1; i < batch.size(); ++i) {
    if (batch.per_sample[i].stableNorm() >
        batch.per_sample[worst].stableNorm()) {
      worst = i;
    }
  }
  throw DivergedRollout(horizon, worst);
}

struct FirstOrderSample {
  Vector gradient;
  int branch_hits = 0;
};

}  // namespace

double GradientBatch::standard_error() const {
  return per_sample.empty() ? 0.0 : std::sqrt(emp_var / size());
}

GradientBatch MakeGradientBatch(EstimatorKind kind,
                                std::vector<Vector> per_sample,
                                int branch_hits) {
  if (per_sample.empty()) throw ConfigError("empty gradient batch");
  const int n = static_cast<int>(per_sample.size());
  const int d = static_cast<int>(per_sample.front().size());
  GradientBatch batch;
  batch.kind = kind;
  batch.branch_hits = branch_hits;
  batch.mean = Vector::Zero(d);
  for (const Vector& g : per_sample) {
    if (g.size() != d) throw ConfigError("ragged gradient batch");
    batch.mean += g;
  }
  batch.mean /= n;
  double sum = 0.0;
  for (const Vector& g : per_sample) sum += (g - batch.mean).squaredNorm();
  batch.emp_var = n > 1 ? sum / (n - 1) : 0.0;
  batch.per_sample = std::move(per_sample);
  return batch;
}

GradientBatch Fobg(const EnvModel& env, const Policy& policy,
                   const Vector& theta, const Vector& x1, int num_samples,
                   const NoiseModel& noise, std::uint64_t seed,
                   Execution execution) {
  CheckBatchSize(num_samples);
  CheckNoise(env, noise);
  const int horizon = env.horizon();
  auto samples = ForEachSample<FirstOrderSample>(
      num_samples, execution, [&](int i) {
        NoiseStream stream(seed, "fobg", static_cast<std::uint64_t>(i));
        const Matrix w = noise.Draw(stream, horizon);
        try {
          GradientRollout r = RolloutWithGradient(env, policy, theta, x1, w);
          return FirstOrderSample{std::move(r.gradient), r.branch_hits};
        } catch (const DivergedRollout& e) {
          throw e.WithSample(i);
        }
      });
  std::vector<Vector> grads;
  grads.reserve(samples.size());
  int hits = 0;
  for (auto& s : samples) {
    hits += s.branch_hits > 0 ? 1 : 0;
    grads.push_back(std::move(s.gradient));
  }
  GradientBatch batch =
      MakeGradientBatch(EstimatorKind::kFirstOrder, std::move(grads), hits);
  CheckBatchFinite(batch, horizon);
  return batch;
}

GradientBatch Zobg(const EnvModel& env, const Policy& policy,
                   const Vector& theta, const Vector& x1, int num_samples,
                   const NoiseModel& noise, std::uint64_t seed,
                   bool use_baseline, Execution execution) {
  CheckBatchSize(num_samples);
  CheckNoise(env, noise);
  const int horizon = env.horizon();
  const double inv_var = 1.0 / (noise.sigma() * noise.sigma());
  double baseline = 0.0;
  if (use_baseline) {
    baseline =
        Rollout(env, policy, theta, x1, Matrix::Zero(env.input_dim(), horizon))
            .total_cost;
  }
  auto grads = ForEachSample<Vector>(num_samples, execution, [&](int i) {
    NoiseStream stream(seed, "zobg", static_cast<std::uint64_t>(i));
    const Matrix w = noise.Draw(stream, horizon);
    Trajectory traj;
    try {
      traj = Rollout(env, policy, theta, x1, w);
    } catch (const DivergedRollout& e) {
      throw e.WithSample(i);
    }
    Vector score = Vector::Zero(policy.param_dim());
    for (int h = 0; h < horizon; ++h) {
      score.noalias() +=
          policy.JacobianTheta(h, traj.states[h], theta).transpose() * w.col(h);
    }
    Vector g = ((traj.total_cost - baseline) * inv_var) * score;
    if (!g.allFinite()) throw DivergedRollout(horizon, i);
    return g;
  });
  GradientBatch batch =
      MakeGradientBatch(EstimatorKind::kZerothOrder, std::move(grads));
  CheckBatchFinite(batch, horizon);
  return batch;
}

double EmpiricalSecondMoment(const GradientBatch& batch) {
  double total = 0.0;
  for (const Vector& g : batch.per_sample) total += g.squaredNorm();
  return total;
}

double DefaultR(const GradientBatch& batch) {
  double r = 0.0;
  for (const Vector& g : batch.per_sample) {
    r = std::max(r, (g - batch.mean).norm());
  }
  return r;
}

double BernsteinEpsilon(double second_moment, double R, int num_samples,
                        int dim, double delta) {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw DomainError("delta must lie in (0, 1)");
  }
  if (!(second_moment >= 0.0) || !(R >= 0.0)) {
    throw DomainError("second moment and R must be non-negative");
  }
  if (num_samples < 1 || dim < 1) {
    throw DomainError("sample count and dimension must be positive");
  }
  const double t = std::log((dim + 1.0) / delta);
  const double a = t * R / 3.0;
  return (a + std::sqrt(a * a + 2.0 * num_samples * t * second_moment)) /
         num_samples;
}

AlphaChoice InterpolationAlpha(double sig0sq, double sig1sq, double gap,
                               double epsilon, double gamma) {
  if (!(sig0sq >= 0) || !(sig1sq >= 0) || !(gap >= 0) || !(epsilon >= 0) ||
      !(gamma >= 0)) {
    throw DomainError("interpolation inputs must be non-negative");
  }
  if (epsilon > gamma) return {0.0, false};
  if (sig0sq + sig1sq == 0.0) throw DegenerateVarianceError();
  const double alpha_inf = sig0sq / (sig1sq + sig0sq);
  const double slack = gamma - epsilon;
  double alpha = alpha_inf * gap <= slack ? alpha_inf : slack / gap;
  alpha = std::clamp(alpha, 0.0, 1.0);
  return {alpha, true};
}

AobgResult Aobg(const GradientBatch& first, const GradientBatch& zeroth,
                double gamma, double delta, std::optional<double> R) {
  if (first.dim() != zeroth.dim()) {
    throw ConfigError("first- and zeroth-order batches differ in dimension");
  }
  AlphaDecision dec;
  dec.gamma = gamma;
  dec.delta = delta;
  dec.num_samples = zeroth.size();
  dec.dim = zeroth.dim();
  dec.sig0sq = zeroth.emp_var;
  dec.sig1sq = first.emp_var;
  dec.gap = (first.mean - zeroth.mean).norm();
  dec.R = R.value_or(DefaultR(zeroth));
  // per-sample second moment: the Bernstein bound needs E|X|^2
  const double second_moment = EmpiricalSecondMoment(zeroth) / zeroth.size();
  dec.epsilon =
      BernsteinEpsilon(second_moment, dec.R, zeroth.size(), zeroth.dim(), delta);

  try {
    const AlphaChoice choice = InterpolationAlpha(dec.sig0sq, dec.sig1sq,
                                                  dec.gap, dec.epsilon, gamma);
    dec.alpha = choice.alpha;
    dec.feasible = choice.feasible;
  } catch (const DegenerateVarianceError&) {
    // both batches constant: trust the first-order mean only as far as it
    // agrees with the zeroth-order one
    dec.degenerate = true;
    dec.feasible = true;
    const double slack = gamma - dec.epsilon;
    dec.alpha = dec.gap <= slack
                    ? 1.0
                    : std::clamp(slack / std::max(dec.gap, 1e-300), 0.0, 1.0);
  }

  AobgResult out;
  out.gradient = dec.alpha * first.mean + (1.0 - dec.alpha) * zeroth.mean;
  out.decision = dec;
  return out;
}

}  // namespace alphagrad
