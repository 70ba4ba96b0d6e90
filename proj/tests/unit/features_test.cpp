// Copyright 2026 The tslx Authors
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
#include "tslx/features.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "test_util.hpp"
#include "tslx/error.hpp"

namespace tslx {
namespace {

std::vector<double> Features(const std::vector<double>& x) {
  const auto f = ExtractPatchFeatures(x);
  return {f.begin(), f.end()};
}

TEST(Features, ConstantPatch) {
  EXPECT_EQ(Features({5, 5, 5, 5}), (std::vector<double>{5, 0, 0, 0, 0, 0, 0}));
}

TEST(Features, TurningPointsAndMeanAbsDiff) {
  const auto f = Features({1, 3, 2, 4});
  EXPECT_EQ(f[kNegTurning], 1.0);
  EXPECT_EQ(f[kPosTurning], 1.0);
  EXPECT_DOUBLE_EQ(f[kMeanAbsDiff], 5.0 / 3.0);
}

TEST(Features, RampSlope) {
  const auto f = Features({0, 1, 2, 3});
  EXPECT_DOUBLE_EQ(f[kTrendSlope], 1.0);
  EXPECT_EQ(f[kNegTurning], 0.0);
  EXPECT_EQ(f[kPosTurning], 0.0);
}

TEST(Features, HandComputedAutocorr) {
  // x = [1,2,3,4]; mean 2.5; deviations -1.5,-.5,.5,1.5.
  // lag sum = .75 - .25 + .75 = 1.25; var sum = 5.
  EXPECT_DOUBLE_EQ(Features({1, 2, 3, 4})[kAutocorrLag1], 0.25);
}

TEST(Features, RejectsShortOrNonFinite) {
  EXPECT_THROW(ExtractPatchFeatures(std::vector<double>{1, 2}), Error);
  EXPECT_THROW(ExtractPatchFeatures(std::vector<double>{1, NAN, 2}), Error);
}

TEST(Features, TableShapeAndNames) {
  const Matrix p(3, 4, {1, 2, 3, 4, 5, 5, 5, 5, 1, 3, 2, 4});
  const auto t = ExtractFeatures(p);
  EXPECT_EQ(t.n_patches(), 3u);
  EXPECT_EQ(t.m(), 7u);
  EXPECT_EQ(t.names().front(), "mean");
  EXPECT_EQ(t.names().back(), "trend_slope");
  EXPECT_EQ(t.values(1, kMean), 5.0);
}

TEST(Features, OracleEquivalence) {
  oracle::Gen gen(101);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto x = gen.Vector(gen.Index(3, 40));
    const auto got = Features(x);
    const auto want = oracle::Features(x);
    for (std::size_t k = 0; k < kFeatureCount; ++k) {
      ASSERT_NEAR(got[k], want[k], 1e-12) << "feature " << k << " trial " << trial;
    }
  }
}

TEST(Features, ShiftInvariance) {
  oracle::Gen gen(5);
  for (int trial = 0; trial < 200; ++trial) {
    auto x = gen.Vector(gen.Index(3, 32));
    const double c = gen.Uniform(-100, 100);
    auto y = x;
    for (double& v : y) v += c;
    const auto fx = Features(x), fy = Features(y);
    EXPECT_NEAR(fy[kMean], fx[kMean] + c, 1e-9);
    for (std::size_t k = 1; k < kFeatureCount; ++k) {
      if (k == kNegTurning || k == kPosTurning) continue;
      EXPECT_NEAR(fy[k], fx[k], 1e-9) << k;
    }
  }
}

TEST(Features, ScaleCovariance) {
  oracle::Gen gen(6);
  for (int trial = 0; trial < 200; ++trial) {
    auto x = gen.Vector(gen.Index(3, 32));
    const double s = gen.Uniform(0.1, 10);
    auto y = x;
    for (double& v : y) v *= s;
    const auto fx = Features(x), fy = Features(y);
    EXPECT_NEAR(fy[kStdPopulation], s * fx[kStdPopulation], 1e-9);
    EXPECT_NEAR(fy[kMeanAbsDiff], s * fx[kMeanAbsDiff], 1e-9);
    EXPECT_NEAR(fy[kTrendSlope], s * fx[kTrendSlope], 1e-9);
    EXPECT_NEAR(fy[kAutocorrLag1], fx[kAutocorrLag1], 1e-9);
    EXPECT_EQ(fy[kNegTurning], fx[kNegTurning]);
    EXPECT_EQ(fy[kPosTurning], fx[kPosTurning]);
  }
}

TEST(Features, TurningCountBounds) {
  oracle::Gen gen(7);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = gen.Index(3, 20);
    std::vector<double> x(n);
    for (double& v : x) v = static_cast<double>(gen.Index(0, 3));
    const auto f = Features(x);
    const double cap = static_cast<double>(n - 2);
    EXPECT_EQ(f[kNegTurning], std::floor(f[kNegTurning]));
    EXPECT_GE(f[kNegTurning], 0.0);
    EXPECT_LE(f[kNegTurning] + f[kPosTurning], cap);
  }
}

TEST(Features, StandardizeColumns) {
  const Matrix m(3, 2, {1, 7, 2, 7, 3, 7});
  const Matrix z = StandardizeColumns(m);
  const double s = std::sqrt(2.0 / 3.0);
  EXPECT_DOUBLE_EQ(z(0, 0), -1.0 / s);
  EXPECT_DOUBLE_EQ(z(1, 0), 0.0);
  EXPECT_DOUBLE_EQ(z(2, 0), 1.0 / s);
  EXPECT_EQ(z(0, 1), 0.0);
}

TEST(BandStats, SinglePatch) {
  const auto b = PatchBandStats(Matrix(1, 3, {1, 2, 3}));
  EXPECT_EQ(b.mean_curve, (std::vector<double>{1, 2, 3}));
  EXPECT_EQ(b.std_curve, (std::vector<double>{0, 0, 0}));
}

TEST(BandStats, SymmetricPair) {
  const auto b = PatchBandStats(Matrix(2, 2, {0, 0, 2, 2}));
  EXPECT_EQ(b.mean_curve, (std::vector<double>{1, 1}));
  EXPECT_EQ(b.std_curve, (std::vector<double>{1, 1}));
}

TEST(BandStats, ColumnOracle) {
  oracle::Gen gen(8);
  const auto rows = gen.Matrix(10, 16);
  const auto b = PatchBandStats(testing::ToMatrix(rows));
  for (std::size_t t = 0; t < 16; ++t) {
    oracle::Vec col;
    for (const auto& r : rows) col.push_back(r[t]);
    EXPECT_NEAR(b.mean_curve[t], oracle::Mean(col), 1e-12);
    EXPECT_NEAR(b.std_curve[t], oracle::PopStd(col), 1e-12);
  }
}

}  // namespace
}  // namespace tslx
