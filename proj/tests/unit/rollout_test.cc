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

#include "alphagrad/rollout.h"

#include <algorithm>
#include <cmath>

#include <gtest/gtest.h>

#include "alphagrad/envs/double_pendulum.h"
#include "alphagrad/envs/friction.h"
#include "alphagrad/envs/heaviside.h"
#include "alphagrad/envs/pushing.h"
#include "alphagrad/envs/quadratic.h"
#include "alphagrad/envs/tennis.h"
#include "alphagrad/noise.h"

namespace alphagrad {
namespace {

QuadraticEnv Integrator(int horizon) {
  QuadraticParams p;
  p.horizon = horizon;
  p.gain = 1.0;
  p.input_weight = 1.0;
  return QuadraticEnv(p);
}

// central differences with step 1e-6 * max(1, |theta_j|)
Vector FiniteDifferenceGradient(const EnvModel& env, const Policy& policy,
                                const Vector& theta, const Vector& x1,
                                const Matrix& w) {
  Vector g(theta.size());
  for (int j = 0; j < theta.size(); ++j) {
    const double step = 1e-6 * std::max(1.0, std::abs(theta[j]));
    Vector hi = theta, lo = theta;
    hi[j] += step;
    lo[j] -= step;
    g[j] = (Rollout(env, policy, hi, x1, w).total_cost -
            Rollout(env, policy, lo, x1, w).total_cost) /
           (2 * step);
  }
  return g;
}

TEST(RolloutTest, IdentityDynamicsWithZeroCost) {
  QuadraticParams p;
  p.horizon = 3;
  p.gain = 0.0;
  p.input_weight = 0.0;
  const QuadraticEnv env(p);
  const Trajectory t = Rollout(env, env.DefaultPolicy(),
                               Vector::Constant(3, 4.2), Vector::Constant(1, 1),
                               Matrix::Zero(1, 3));
  EXPECT_EQ(t.total_cost, 0.0);
  for (const Vector& x : t.states) EXPECT_EQ(x[0], 1.0);
}

TEST(RolloutTest, ScalarIntegratorArithmetic) {
  const QuadraticEnv env = Integrator(2);
  const Trajectory t = Rollout(env, env.DefaultPolicy(), Vector::Ones(2),
                               Vector::Zero(1), Matrix::Zero(1, 2));
  EXPECT_EQ(t.total_cost, 2.0);
  ASSERT_EQ(t.states.size(), 3u);
  EXPECT_EQ(t.states[0][0], 0.0);
  EXPECT_EQ(t.states[1][0], 1.0);
  EXPECT_EQ(t.states[2][0], 2.0);
  EXPECT_EQ(t.step_costs.size(), 2u);
  EXPECT_EQ(t.inputs[1][0], 1.0);
}

TEST(RolloutTest, NoiseEntersInputs) {
  const QuadraticEnv env = Integrator(2);
  const Matrix w = (Matrix(1, 2) << 0.5, -0.25).finished();
  const Trajectory t = Rollout(env, env.DefaultPolicy(), Vector::Ones(2),
                               Vector::Zero(1), w);
  EXPECT_EQ(t.inputs[0][0], 1.5);
  EXPECT_EQ(t.inputs[1][0], 0.75);
  EXPECT_EQ(t.noises, w);
}

TEST(RolloutTest, HeavisideStepCost) {
  const HeavisideEnv env;
  const Trajectory t =
      Rollout(env, env.DefaultPolicy(), Vector::Constant(1, 0.3),
              Vector::Zero(1), Matrix::Constant(1, 1, -0.5));
  EXPECT_EQ(t.total_cost, 0.0);
  const Trajectory u =
      Rollout(env, env.DefaultPolicy(), Vector::Constant(1, 0.3),
              Vector::Zero(1), Matrix::Constant(1, 1, -0.3));
  EXPECT_EQ(u.total_cost, 1.0);  // H(0) = 1
}

TEST(RolloutWithGradientTest, SquareDerivative) {
  const QuadraticEnv env;  // one step, c = u^2
  const GradientRollout g =
      RolloutWithGradient(env, env.DefaultPolicy(), Vector::Constant(1, 2.0),
                          Vector::Zero(1), Matrix::Zero(1, 1));
  EXPECT_EQ(g.value, 4.0);
  EXPECT_EQ(g.gradient[0], 4.0);
}

TEST(RolloutWithGradientTest, IntegratorMatchesFiniteDifferences) {
  QuadraticParams p;
  p.horizon = 2;
  p.state_weight = 1.0;
  const QuadraticEnv env(p);
  const Vector theta = (Vector(2) << 1.0, 1.0).finished();
  const Matrix w = (Matrix(1, 2) << 0.1, -0.3).finished();
  const Vector x1 = Vector::Constant(1, 0.4);
  const GradientRollout g =
      RolloutWithGradient(env, env.DefaultPolicy(), theta, x1, w);
  const Vector fd = FiniteDifferenceGradient(env, env.DefaultPolicy(), theta,
                                             x1, w);
  EXPECT_LT((g.gradient - fd).cwiseAbs().maxCoeff(), 1e-6);
}

TEST(RolloutWithGradientTest, HeavisideGradientIsZero) {
  const HeavisideEnv env;
  NoiseStream s(1, "t", 0);
  for (int i = 0; i < 100; ++i) {
    const Matrix w = Matrix::Constant(1, 1, s.Normal());
    const Vector theta = Vector::Constant(1, s.Normal());
    EXPECT_EQ(RolloutWithGradient(env, env.DefaultPolicy(), theta,
                                  Vector::Zero(1), w)
                  .gradient[0],
              0.0);
  }
}

TEST(RolloutWithGradientTest, ValueIsBitIdenticalToRollout) {
  const PushingEnv push;
  const FrictionEnv friction;
  const TennisEnv tennis;
  const DoublePendulumEnv pendulum;
  const EnvModel* envs[] = {&push, &friction, &tennis, &pendulum};
  for (const EnvModel* env : envs) {
    const Policy policy = env->DefaultPolicy();
    const NoiseModel noise(0.1, env->input_dim());
    NoiseStream s(3, "bits", 0);
    const Matrix w = noise.Draw(s, env->horizon());
    const Vector theta = env->DefaultTheta();
    const Vector x1 = env->DefaultInitialState();
    EXPECT_EQ(RolloutWithGradient(*env, policy, theta, x1, w).value,
              Rollout(*env, policy, theta, x1, w).total_cost)
        << env->name();
  }
}

// smooth_everywhere envs: gradient agrees with central differences
TEST(RolloutWithGradientTest, ChainRuleExactnessOnSmoothEnvs) {
  QuadraticParams qp;
  qp.horizon = 4;
  qp.state_weight = 0.7;
  qp.linear_weight = 0.3;
  const QuadraticEnv quad(qp);
  DoublePendulumParams pp;
  pp.horizon = 50;
  const DoublePendulumEnv pendulum(pp);
  const EnvModel* envs[] = {&quad, &pendulum};
  for (const EnvModel* env : envs) {
    ASSERT_TRUE(env->smooth_everywhere());
    const Policy policy = env->DefaultPolicy();
    const NoiseModel noise(0.2, env->input_dim());
    for (int trial = 0; trial < 100; ++trial) {
      NoiseStream s(17, env->name(), trial);
      const Matrix w = noise.Draw(s, env->horizon());
      Vector theta = env->DefaultTheta();
      for (int j = 0; j < theta.size(); ++j) theta[j] += 0.3 * s.Normal();
      Vector x1 = env->DefaultInitialState();
      for (int j = 0; j < x1.size(); ++j) x1[j] += 0.1 * s.Normal();
      const Vector g =
          RolloutWithGradient(*env, policy, theta, x1, w).gradient;
      const Vector fd = FiniteDifferenceGradient(*env, policy, theta, x1, w);
      EXPECT_LE((g - fd).norm(), 1e-5 * std::max(1.0, fd.norm()))
          << env->name() << " trial " << trial;
    }
  }
}

TEST(RolloutTest, RepeatedCallsAreBitIdentical) {
  const PushingEnv env;
  const NoiseModel noise(0.1, 1);
  NoiseStream s(5, "rep", 0);
  const Matrix w = noise.Draw(s, env.horizon());
  const Trajectory a = Rollout(env, env.DefaultPolicy(), env.DefaultTheta(),
                               env.DefaultInitialState(), w);
  const Trajectory b = Rollout(env, env.DefaultPolicy(), env.DefaultTheta(),
                               env.DefaultInitialState(), w);
  EXPECT_EQ(a.total_cost, b.total_cost);
  EXPECT_EQ(a.step_costs, b.step_costs);
}

TEST(RolloutTest, DimensionMismatchIsConfigError) {
  const QuadraticEnv env = Integrator(2);
  EXPECT_THROW(Rollout(env, env.DefaultPolicy(), Vector::Ones(3),
                       Vector::Zero(1), Matrix::Zero(1, 2)),
               ConfigError);
  EXPECT_THROW(Rollout(env, env.DefaultPolicy(), Vector::Ones(2),
                       Vector::Zero(2), Matrix::Zero(1, 2)),
               ConfigError);
  EXPECT_THROW(Rollout(env, env.DefaultPolicy(), Vector::Ones(2),
                       Vector::Zero(1), Matrix::Zero(1, 3)),
               ConfigError);
}

TEST(RolloutTest, BlowUpRaisesDivergedWithStep) {
  QuadraticParams p;
  p.horizon = 3;
  p.gain = 1e300;
  p.initial_input = 1e10;  // x_2 overflows
  const QuadraticEnv env(p);
  try {
    Rollout(env, env.DefaultPolicy(), env.DefaultTheta(),
            env.DefaultInitialState(), Matrix::Zero(1, env.horizon()));
    FAIL() << "expected divergence";
  } catch (const DivergedRollout& e) {
    EXPECT_GE(e.step(), 1);
    EXPECT_LE(e.step(), env.horizon());
  }
}

TEST(ValueToGoTest, PartialSums) {
  Trajectory t;
  t.step_costs = {1.0, 2.0, 3.0};
  t.total_cost = 6.0;
  EXPECT_EQ(ValueToGo(t, 2), 5.0);
  EXPECT_EQ(ValueToGo(t, 1), t.total_cost);
  EXPECT_EQ(ValueToGo(t, 3), 3.0);
  EXPECT_THROW(ValueToGo(t, 0), std::out_of_range);
  EXPECT_THROW(ValueToGo(t, 4), std::out_of_range);
  Trajectory z;
  z.step_costs = {0.0, 0.0};
  EXPECT_EQ(ValueToGo(z, 2), 0.0);
}

TEST(ValueToGoTest, RecomposesTotal) {
  const PushingEnv env;
  const Trajectory t = Rollout(env, env.DefaultPolicy(), env.DefaultTheta(),
                               env.DefaultInitialState(),
                               Matrix::Zero(1, env.horizon()));
  EXPECT_NEAR(ValueToGo(t, 1), t.step_costs[0] + ValueToGo(t, 2),
              1e-12 * std::abs(t.total_cost));
}

}  // namespace
}  // namespace alphagrad
