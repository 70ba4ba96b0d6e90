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
#include "tslx/smi.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "test_util.hpp"
#include "tslx/error.hpp"

namespace tslx {
namespace {

// Random grouping of `n` feature rows into `g` non-empty groups.
Groups RandomGroups(oracle::Gen& gen, std::size_t n, std::size_t g) {
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::shuffle(idx.begin(), idx.end(), gen.engine());
  Groups out(g);
  for (std::size_t i = 0; i < n; ++i) out[i < g ? i : gen.Index(0, g - 1)].push_back(idx[i]);
  return out;
}

std::vector<oracle::Mat> Split(const oracle::Mat& rows, const Groups& groups) {
  std::vector<oracle::Mat> out;
  for (const auto& g : groups) {
    oracle::Mat part;
    for (auto i : g) part.push_back(rows[i]);
    out.push_back(part);
  }
  return out;
}

TEST(DIntra, SingletonsGiveZero) {
  const Matrix f(3, 2, {1, 2, 3, 4, 5, 6});
  EXPECT_EQ(DIntra(f, {{0}, {1}, {2}}), 0.0);
}

TEST(DIntra, TwoPointStd) {
  EXPECT_EQ(DIntra(Matrix(2, 1, {0, 2}), {{0, 1}}), 1.0);
}

TEST(DInter, TwoGroups) {
  EXPECT_EQ(DInter(Matrix(2, 1, {0, 3}), {{0}, {1}}), 3.0);
}

TEST(DInter, SingleGroupIsZero) {
  EXPECT_EQ(DInter(Matrix(2, 1, {0, 3}), {{0, 1}}), 0.0);
}

TEST(DInter, ThreeGroupsPairSum) {
  EXPECT_EQ(DInter(Matrix(3, 1, {0, 1, 4}), {{0}, {1}, {2}}), 8.0);
}

TEST(Groups, EmptyOrOutOfRangeRejected) {
  const Matrix f(2, 1, {0, 1});
  EXPECT_THROW(DIntra(f, {{0}, {}}), Error);
  EXPECT_THROW(DInter(f, {{0, 5}}), Error);
  EXPECT_THROW(DIntra(f, {}), Error);
}

TEST(DistancesOracle, RandomGroupings) {
  oracle::Gen gen(21);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = gen.Index(2, 40);
    const auto rows = gen.Matrix(n, gen.Index(1, 7));
    const auto groups = RandomGroups(gen, n, gen.Index(1, n));
    const auto f = testing::ToMatrix(rows);
    const auto parts = Split(rows, groups);
    // Sums reach the thousands here, so the bound is relative.
    const double di = oracle::DIntra(parts), de = oracle::DInter(parts);
    ASSERT_NEAR(DIntra(f, groups), di, 1e-12 * std::max(1.0, di));
    ASSERT_NEAR(DInter(f, groups), de, 1e-12 * std::max(1.0, de));
  }
}

TEST(DistancesProperty, PermutationInvariant) {
  oracle::Gen gen(22);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = gen.Index(2, 30);
    const auto f = testing::ToMatrix(gen.Matrix(n, 7));
    auto groups = RandomGroups(gen, n, gen.Index(1, std::min<std::size_t>(n, 6)));
    const double di = DIntra(f, groups), de = DInter(f, groups);
    std::shuffle(groups.begin(), groups.end(), gen.engine());
    for (auto& g : groups) std::shuffle(g.begin(), g.end(), gen.engine());
    EXPECT_NEAR(DIntra(f, groups), di, 1e-12);
    EXPECT_NEAR(DInter(f, groups), de, 1e-12);
  }
}

TEST(Smi, BoundaryCases) {
  EXPECT_EQ(Smi(0.0, 5.0), 1.0);
  EXPECT_EQ(Smi(0.0, 0.0), 1.0);
  EXPECT_EQ(Smi(3.0, 0.0), 0.0);
}

TEST(Smi, SpotValue) {
  EXPECT_NEAR(Smi(1.0, 20.0), 0.6321205588285577, 1e-12);
  EXPECT_NEAR(Smi(1.0, 20.0), 1.0 - std::exp(-1.0), 1e-15);
}

TEST(Smi, CustomHyperparameters) {
  EXPECT_NEAR(Smi(2.0, 4.0, {1.0, 1.0}), 1.0 - std::exp(-2.0), 1e-15);
  EXPECT_THROW(Smi(1.0, 1.0, {0.0, 0.1}), Error);
  EXPECT_THROW(Smi(1.0, 1.0, {0.5, -1.0}), Error);
}

TEST(Smi, NegativeInputsRejected) {
  EXPECT_THROW(Smi(-1.0, 1.0), Error);
  EXPECT_THROW(Smi(1.0, -1.0), Error);
  EXPECT_THROW(Smi(NAN, 1.0), Error);
}

TEST(SmiProperty, MonotoneAndBounded) {
  oracle::Gen gen(23);
  for (int trial = 0; trial < 1000; ++trial) {
    const double di = gen.Uniform(0.01, 50), de = gen.Uniform(0.01, 50);
    const double s = Smi(di, de);
    ASSERT_GE(s, 0.0);
    ASSERT_LE(s, 1.0);
    const double bump = gen.Uniform(0.01, 1.0);
    EXPECT_GT(Smi(di, de + bump), s);
    EXPECT_LT(Smi(di + bump, de), s);
  }
}

TEST(SmiReport, DiagnosticsAndWarning) {
  FeatureTable t{Matrix(3, 7, std::vector<double>(21, 1.0))};
  t.values(2, 0) = 4.0;
  const auto r = ComputeSmiReport(t, {{0, 1}, {2}}, {"x", "y"});
  EXPECT_EQ(r.n_groups, 2u);
  EXPECT_EQ(r.d_intra, 0.0);
  EXPECT_EQ(r.d_inter, 3.0);
  EXPECT_EQ(r.smi, 1.0);
  EXPECT_EQ(r.per_group[1].key, "y");
  EXPECT_EQ(r.per_group[0].size, 2u);
  EXPECT_EQ(r.per_group[1].mean[0], 4.0);
  EXPECT_TRUE(r.warnings.empty());

  t.values(1, 0) = 3.0;
  const auto single = ComputeSmiReport(t, {{0, 1, 2}});
  EXPECT_EQ(single.smi, 0.0);
  EXPECT_EQ(single.warnings.size(), 1u);
}

TEST(GroupsFromLabels, AscendingLabels) {
  const std::vector<std::size_t> labels = {3, 1, 3, 0};
  EXPECT_EQ(GroupsFromLabels(labels), (Groups{{3}, {1}, {0, 2}}));
}

TEST(Silhouette, SeparatedDuplicates) {
  const std::vector<std::size_t> labels = {0, 0, 1, 1};
  EXPECT_EQ(Silhouette(Matrix(4, 1, {0, 0, 10, 10}), labels), 1.0);
}

TEST(Silhouette, AllIdenticalIsZero) {
  const std::vector<std::size_t> labels = {0, 0, 1, 1};
  EXPECT_EQ(Silhouette(Matrix(4, 1, {2, 2, 2, 2}), labels), 0.0);
}

TEST(Silhouette, SingletonContributesZero) {
  // Point 2 is a singleton and contributes 0 to the mean.
  const std::vector<std::size_t> labels = {0, 0, 1};
  const Matrix p(3, 1, {0, 1, 10});
  EXPECT_NEAR(Silhouette(p, labels), oracle::Silhouette({{0}, {1}, {10}}, labels), 1e-15);
}

TEST(Silhouette, NeedsTwoClusters) {
  const std::vector<std::size_t> labels = {4, 4};
  EXPECT_THROW(Silhouette(Matrix(2, 1, {0, 1}), labels), Error);
}

TEST(Silhouette, OracleAndRange) {
  oracle::Gen gen(24);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = trial == 0 ? 50 : gen.Index(2, 40);
    const std::size_t g = trial == 0 ? 3 : gen.Index(2, std::min<std::size_t>(n, 5));
    const auto rows = gen.Matrix(n, gen.Index(1, 7));
    std::vector<std::size_t> labels(n);
    for (std::size_t i = 0; i < n; ++i) labels[i] = i < g ? i : gen.Index(0, g - 1);
    const double s = Silhouette(testing::ToMatrix(rows), labels);
    ASSERT_NEAR(s, oracle::Silhouette(rows, labels), 1e-12);
    ASSERT_GE(s, -1.0);
    ASSERT_LE(s, 1.0);
  }
}

TEST(ErrorMetrics, Examples) {
  const std::vector<double> y = {1, 2, 3}, yh = {2, 2, 5};
  EXPECT_EQ(Mse(y, y), 0.0);
  EXPECT_EQ(Mae(y, y), 0.0);
  const std::vector<double> z = {0, 0}, zh = {1, -1};
  EXPECT_EQ(Mse(z, zh), 1.0);
  EXPECT_EQ(Mae(z, zh), 1.0);
  EXPECT_DOUBLE_EQ(Mse(y, yh), 5.0 / 3.0);
  EXPECT_DOUBLE_EQ(Mae(y, yh), 1.0);
  EXPECT_THROW(Mse(y, z), Error);
  EXPECT_THROW(Mae(std::vector<double>{}, std::vector<double>{}), Error);
}

}  // namespace
}  // namespace tslx
