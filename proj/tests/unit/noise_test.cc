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

#include <cmath>
#include <set>

#include <gtest/gtest.h>

namespace alphagrad {
namespace {

TEST(NoiseStreamTest, SameKeyRepeatsExactly) {
  NoiseStream a(42, "fobg", 7);
  NoiseStream b(42, "fobg", 7);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.Normal(), b.Normal());
}

TEST(NoiseStreamTest, TagsAndIndicesGiveDistinctStreams) {
  std::set<double> firsts;
  for (const char* tag : {"fobg", "zobg", "eval"}) {
    for (std::uint64_t i = 0; i < 50; ++i) {
      firsts.insert(NoiseStream(1, tag, i).Normal());
    }
  }
  EXPECT_EQ(firsts.size(), 150u);
  EXPECT_NE(NoiseStream(1, "fobg", 0).Normal(),
            NoiseStream(2, "fobg", 0).Normal());
}

TEST(NoiseStreamTest, NormalMoments) {
  NoiseStream s(9, "moments", 0);
  const int n = 200000;
  double sum = 0, sq = 0, quart = 0;
  for (int i = 0; i < n; ++i) {
    const double z = s.Normal();
    sum += z;
    sq += z * z;
    quart += z * z * z * z;
  }
  EXPECT_NEAR(sum / n, 0.0, 4.0 / std::sqrt(n));
  EXPECT_NEAR(sq / n, 1.0, 4.0 * std::sqrt(2.0 / n));
  EXPECT_NEAR(quart / n, 3.0, 4.0 * std::sqrt(96.0 / n));
}

TEST(NoiseModelTest, DrawShapeScaleAndScore) {
  const NoiseModel model(0.5, 3);
  NoiseStream s(3, "draw", 0);
  const Matrix w = model.Draw(s, 4);
  EXPECT_EQ(w.rows(), 3);
  EXPECT_EQ(w.cols(), 4);
  NoiseStream t(3, "draw", 0);
  EXPECT_DOUBLE_EQ(w(0, 0), 0.5 * t.Normal());
  const Vector x = Vector::Constant(3, 0.5);
  EXPECT_TRUE(model.Score(x).isApprox(Vector::Constant(3, 2.0)));
}

TEST(NoiseModelTest, MeanShrinksWithSigmaOverRootM) {
  const double sigma = 2.0;
  const NoiseModel model(sigma, 1);
  NoiseStream s(11, "mean", 0);
  const int m = 40000;
  const double mean = model.Draw(s, m).mean();
  EXPECT_LT(std::abs(mean), 4.0 * sigma / std::sqrt(m));
}

TEST(NoiseModelTest, RejectsNonPositiveSigma) {
  EXPECT_THROW(NoiseModel(0.0, 1), DomainError);
  EXPECT_THROW(NoiseModel(-1.0, 1), DomainError);
}

TEST(DeriveSeedTest, DependsOnEveryInput) {
  const auto base = DeriveSeed(5, "k", 10.0);
  EXPECT_EQ(base, DeriveSeed(5, "k", 10.0));
  EXPECT_NE(base, DeriveSeed(6, "k", 10.0));
  EXPECT_NE(base, DeriveSeed(5, "nu", 10.0));
  EXPECT_NE(base, DeriveSeed(5, "k", 100.0));
}

}  // namespace
}  // namespace alphagrad
