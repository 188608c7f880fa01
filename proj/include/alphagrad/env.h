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

#ifndef ALPHAGRAD_ENV_H_
#define ALPHAGRAD_ENV_H_

#include <array>
#include <string>

#include "alphagrad/dual.h"
#include "alphagrad/policy.h"
#include "alphagrad/types.h"

namespace alphagrad {

struct StepJacobians {
  Matrix state;  // d phi / dx, n x n
  Matrix input;  // d phi / du, n x m
};

struct CostGradient {
  Vector state;  // n
  Vector input;  // m
};

// Discrete-time control system x_{h+1} = phi_h(x_h, u_h) with per-step costs
// c_h(x_h, u_h) and an optional terminal cost on x_{H+1}. Step indices are
// 0-based here.
//
// Derivative callbacks are defined everywhere. At kinks and jumps they return
// the one-sided derivative of the branch selected by the environment's
// documented branch rule; AtBranchPoint reports when that happened.
//
// Implementations are immutable after construction and safe to share across
// threads.
class EnvModel {
 public:
  virtual ~EnvModel() = default;

  virtual std::string name() const = 0;
  virtual int state_dim() const = 0;
  virtual int input_dim() const = 0;
  virtual int horizon() const = 0;
  // seconds per step; 0 for static (one-shot) systems
  virtual double timestep() const { return 0.0; }
  // true only if phi and every cost are C^1 everywhere
  virtual bool smooth_everywhere() const = 0;

  virtual Vector Step(int h, const Vector& x, const Vector& u) const = 0;
  virtual StepJacobians StepDerivatives(int h, const Vector& x,
                                        const Vector& u) const = 0;
  virtual double Cost(int h, const Vector& x, const Vector& u) const = 0;
  virtual CostGradient CostDerivatives(int h, const Vector& x,
                                       const Vector& u) const = 0;
  virtual double TerminalCost(const Vector& /*x*/) const { return 0.0; }
  virtual Vector TerminalCostGradient(const Vector& x) const {
    return Vector::Zero(x.size());
  }
  virtual bool AtBranchPoint(int /*h*/, const Vector& /*x*/,
                             const Vector& /*u*/) const {
    return false;
  }

  virtual Vector DefaultInitialState() const = 0;
  virtual Policy DefaultPolicy() const {
    return Policy::OpenLoop(input_dim(), horizon());
  }
  virtual Vector DefaultTheta() const {
    return Vector::Zero(DefaultPolicy().param_dim());
  }
};

// Implements the EnvModel callbacks for an environment written once,
// generically over the scalar type. Derived provides
//
//   template <class T> State<T> StepT(int h, const State<T>&, const Input<T>&)
//   template <class T> T CostT(int h, const State<T>&, const Input<T>&)
//
// and optionally TerminalCostT. Jacobians come from a single evaluation on
// Dual<NX + NU>, so branches follow the primal values and the branch rule is
// whatever the generic code does at equality.
template <class Derived, int NX, int NU>
class AutoDiffEnv : public EnvModel {
 public:
  template <class T>
  using State = std::array<T, NX>;
  template <class T>
  using Input = std::array<T, NU>;

  int state_dim() const final { return NX; }
  int input_dim() const final { return NU; }

  Vector Step(int h, const Vector& x, const Vector& u) const override {
    const auto next = derived().template StepT<double>(h, Unpack<NX>(x),
                                                       Unpack<NU>(u));
    return Pack(next);
  }

  StepJacobians StepDerivatives(int h, const Vector& x,
                                const Vector& u) const override {
    auto [xs, us] = Seed(x, u);
    const auto next = derived().template StepT<D>(h, xs, us);
    StepJacobians jac{Matrix(NX, NX), Matrix(NX, NU)};
    for (int i = 0; i < NX; ++i) {
      jac.state.row(i) = next[i].tangent().template head<NX>().transpose();
      jac.input.row(i) = next[i].tangent().template tail<NU>().transpose();
    }
    return jac;
  }

  double Cost(int h, const Vector& x, const Vector& u) const override {
    return derived().template CostT<double>(h, Unpack<NX>(x), Unpack<NU>(u));
  }

  CostGradient CostDerivatives(int h, const Vector& x,
                               const Vector& u) const override {
    auto [xs, us] = Seed(x, u);
    const D c = derived().template CostT<D>(h, xs, us);
    return {c.tangent().template head<NX>(), c.tangent().template tail<NU>()};
  }

  double TerminalCost(const Vector& x) const override {
    return derived().template TerminalCostT<double>(Unpack<NX>(x));
  }

  Vector TerminalCostGradient(const Vector& x) const override {
    using DX = Dual<NX>;
    State<DX> xs;
    for (int i = 0; i < NX; ++i) xs[i] = DX::Variable(x[i], i);
    return derived().template TerminalCostT<DX>(xs).tangent();
  }

  template <class T>
  T TerminalCostT(const State<T>& /*x*/) const {
    return T(0.0);
  }

 protected:
  using D = Dual<NX + NU>;

  const Derived& derived() const { return static_cast<const Derived&>(*this); }

  template <int K>
  static std::array<double, K> Unpack(const Vector& v) {
    if (v.size() != K) {
      throw ConfigError("expected vector of size " + std::to_string(K) +
                        ", got " + std::to_string(v.size()));
    }
    std::array<double, K> out;
    for (int i = 0; i < K; ++i) out[i] = v[i];
    return out;
  }

  template <std::size_t K>
  static Vector Pack(const std::array<double, K>& a) {
    Vector v(static_cast<Eigen::Index>(K));
    for (std::size_t i = 0; i < K; ++i) v[i] = a[i];
    return v;
  }

  static std::pair<State<D>, Input<D>> Seed(const Vector& x, const Vector& u) {
    const auto xv = Unpack<NX>(x);
    const auto uv = Unpack<NU>(u);
    State<D> xs;
    Input<D> us;
    for (int i = 0; i < NX; ++i) xs[i] = D::Variable(xv[i], i);
    for (int j = 0; j < NU; ++j) us[j] = D::Variable(uv[j], NX + j);
    return {xs, us};
  }
};

}  // namespace alphagrad

#endif  // ALPHAGRAD_ENV_H_
