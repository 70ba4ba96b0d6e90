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
#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "tslx/matrix.hpp"

namespace tslx {

inline constexpr std::size_t kFeatureCount = 7;

//! Canonical column order of a FeatureTable.
inline constexpr std::array<std::string_view, kFeatureCount> kFeatureNames = {
    "mean",          "std_population", "autocorr_lag1", "n_neg_turning",
    "n_pos_turning", "mean_abs_diff",  "trend_slope",
};

enum Feature : std::size_t {
  kMean = 0,
  kStdPopulation,
  kAutocorrLag1,
  kNegTurning,
  kPosTurning,
  kMeanAbsDiff,
  kTrendSlope,
};

using FeatureVector = std::array<double, kFeatureCount>;

//! Per-patch statistical features: one row per patch, kFeatureNames columns.
struct FeatureTable {
  Matrix values;

  std::size_t n_patches() const noexcept { return values.rows(); }
  static constexpr std::size_t m() noexcept { return kFeatureCount; }
  std::vector<std::string> names() const;
};

//! Features of one patch. Requires length >= 3 and finite values.
//!   mean, population std,
//!   lag-1 autocorrelation (0 when the variance is 0),
//!   strict local minima / maxima counts over interior points,
//!   mean absolute first difference,
//!   least-squares slope against t = 0..L-1.
FeatureVector ExtractPatchFeatures(std::span<const double> patch);

FeatureTable ExtractFeatures(const Matrix& patches);

//! Column-wise population z-score; a zero-variance column becomes all zeros.
Matrix StandardizeColumns(const Matrix& values);

struct BandStats {
  std::vector<double> mean_curve;
  std::vector<double> std_curve;
};

//! Pointwise mean and population std across patches at each time index.
BandStats PatchBandStats(const Matrix& patches);

}  // namespace tslx
