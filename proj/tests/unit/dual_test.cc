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

#include "alphagrad/dual.h"

#include <cmath>

#include <gtest/gtest.h>

namespace alphagrad {
namespace {

using D2 = Dual<2>;
using DX = Dual<Eigen::Dynamic>;

TEST(DualTest, ProductRule) {
  const D2 a = D2::Variable(3.0, 0);
  const D2 b = D2::Variable(5.0, 1);
  const D2 p = a * b;
  EXPECT_EQ(p.value(), 15.0);
  EXPECT_EQ(p.tangent()[0], 5.0);
  EXPECT_EQ(p.tangent()[1], 3.0);
}

TEST(DualTest, QuotientAndScalarMixing) {
  const D2 a = D2::Variable(3.0, 0);
  const D2 b = D2::Variable(2.0, 1);
  const D2 q = (2.0 * a + 1.0) / b;  // (2a+1)/b
  EXPECT_DOUBLE_EQ(q.value(), 3.5);
  EXPECT_DOUBLE_EQ(q.tangent()[0], 1.0);
  EXPECT_DOUBLE_EQ(q.tangent()[1], -7.0 / 4.0);
  const D2 r = 1.0 / b;
  EXPECT_DOUBLE_EQ(r.tangent()[1], -0.25);
  const D2 s = 4.0 - a;
  EXPECT_DOUBLE_EQ(s.tangent()[0], -1.0);
}

TEST(DualTest, CompoundAssignmentMatchesBinaryOps) {
  D2 a = D2::Variable(1.5, 0);
  const D2 b = D2::Variable(-0.5, 1);
  D2 c = a;
  c += b;
  c *= b;
  c -= a;
  c /= b;
  const D2 expected = ((a + b) * b - a) / b;
  EXPECT_DOUBLE_EQ(c.value(), expected.value());
  EXPECT_DOUBLE_EQ(c.tangent()[0], expected.tangent()[0]);
  EXPECT_DOUBLE_EQ(c.tangent()[1], expected.tangent()[1]);
}

double CentralDifference(double (*f)(double), double x) {
  const double h = 1e-6 * std::max(1.0, std::abs(x));
  return (f(x + h) - f(x - h)) / (2 * h);
}

TEST(DualTest, ElementaryFunctionsMatchFiniteDifferences) {
  const double x = 0.7;
  const Dual<1> v = Dual<1>::Variable(x, 0);
  struct Case {
    Dual<1> dual;
    double (*f)(double);
  };
  const Case cases[] = {
      {sin(v), [](double t) { return std::sin(t); }},
      {cos(v), [](double t) { return std::cos(t); }},
      {tan(v), [](double t) { return std::tan(t); }},
      {exp(v), [](double t) { return std::exp(t); }},
      {log(v), [](double t) { return std::log(t); }},
      {sqrt(v), [](double t) { return std::sqrt(t); }},
      {pow(v, 2.5), [](double t) { return std::pow(t, 2.5); }},
      {abs(-v), [](double t) { return std::abs(-t); }},
  };
  for (const auto& c : cases) {
    EXPECT_DOUBLE_EQ(c.dual.value(), c.f(x));
    EXPECT_NEAR(c.dual.tangent()[0], CentralDifference(c.f, x), 1e-8);
  }
}

TEST(DualTest, ComparisonsUseValueOnly) {
  const D2 a(1.0, D2::Tangent(5.0, 0.0));
  const D2 b(1.0, D2::Tangent(0.0, -5.0));
  EXPECT_FALSE(a < b);
  EXPECT_TRUE(a <= b);
  EXPECT_TRUE(a >= b);
  EXPECT_TRUE(a > 0.5);
  EXPECT_TRUE(0.5 < a);
}

TEST(DualTest, DynamicEmptyTangentActsAsConstant) {
  const DX c(2.0);
  const DX v = DX::Variable(3.0, 1, 3);
  const DX sum = c + v;
  ASSERT_EQ(sum.tangent().size(), 3);
  EXPECT_EQ(sum.tangent()[1], 1.0);
  const DX prod = c * v;
  EXPECT_EQ(prod.tangent()[1], 2.0);
  DX acc(0.0);
  acc += v;
  acc -= 2.0 * v;
  EXPECT_EQ(acc.tangent()[1], -1.0);
  EXPECT_EQ((c * c).tangent().size(), 0);
}

TEST(DualTest, ValueHelperCoversDoublesAndDuals) {
  EXPECT_EQ(Value(2.5), 2.5);
  EXPECT_EQ(Value(D2::Variable(4.0, 1)), 4.0);
}

}  // namespace
}  // namespace alphagrad
