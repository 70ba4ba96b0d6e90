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

#include <cmath>
#include <string>

#include "tslx/error.hpp"
#include "tslx/stats.hpp"

namespace tslx {

std::vector<std::string> FeatureTable::names() const {
  return {kFeatureNames.begin(), kFeatureNames.end()};
}

FeatureVector ExtractPatchFeatures(std::span<const double> x) {
  const std::size_t len = x.size();
  if (len < 3) {
    Fail(ErrorCode::kInvalidArgument,
         "patch length " + std::to_string(len) +
             " < 3: turning points and autocorrelation need interior points");
  }
  for (std::size_t t = 0; t < len; ++t) {
    if (!std::isfinite(x[t])) {
      Fail(ErrorCode::kInvalidData,
           "non-finite patch value at index " + std::to_string(t));
    }
  }

  FeatureVector f{};
  const MeanStd ms = PopulationMeanStd(x);
  f[kMean] = ms.mean;
  f[kStdPopulation] = ms.std;

  double denom = 0.0;
  double numer = 0.0;
  for (std::size_t t = 0; t < len; ++t) {
    const double d = x[t] - ms.mean;
    denom += d * d;
    if (t + 1 < len) numer += d * (x[t + 1] - ms.mean);
  }
  f[kAutocorrLag1] = denom == 0.0 ? 0.0 : numer / denom;

  double neg = 0.0;
  double pos = 0.0;
  for (std::size_t t = 1; t + 1 < len; ++t) {
    if (x[t] < x[t - 1] && x[t] < x[t + 1]) neg += 1.0;
    if (x[t] > x[t - 1] && x[t] > x[t + 1]) pos += 1.0;
  }
  f[kNegTurning] = neg;
  f[kPosTurning] = pos;

  double abs_diff = 0.0;
  for (std::size_t t = 0; t + 1 < len; ++t) abs_diff += std::abs(x[t + 1] - x[t]);
  f[kMeanAbsDiff] = abs_diff / static_cast<double>(len - 1);

  const double t_mean = static_cast<double>(len - 1) / 2.0;
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t t = 0; t < len; ++t) {
    const double dt = static_cast<double>(t) - t_mean;
    sxy += dt * (x[t] - ms.mean);
    sxx += dt * dt;
  }
  f[kTrendSlope] = sxy / sxx;
  return f;
}

FeatureTable ExtractFeatures(const Matrix& patches) {
  Matrix out(patches.rows(), kFeatureCount);
  for (std::size_t p = 0; p < patches.rows(); ++p) {
    FeatureVector f;
    try {
      f = ExtractPatchFeatures(patches.row(p));
    } catch (const Error& e) {
      throw Error(e.code(), "patch " + std::to_string(p) + ": " + e.what());
    }
    auto row = out.row(p);
    for (std::size_t k = 0; k < kFeatureCount; ++k) row[k] = f[k];
  }
  return FeatureTable{std::move(out)};
}

Matrix StandardizeColumns(const Matrix& values) {
  Matrix out = values;
  std::vector<double> column(values.rows());
  for (std::size_t k = 0; k < values.cols(); ++k) {
    for (std::size_t i = 0; i < values.rows(); ++i) column[i] = values(i, k);
    const MeanStd ms = PopulationMeanStd(column);
    for (std::size_t i = 0; i < values.rows(); ++i) {
      out(i, k) = ms.std > 0.0 ? (values(i, k) - ms.mean) / ms.std : 0.0;
    }
  }
  return out;
}

BandStats PatchBandStats(const Matrix& patches) {
  BandStats out;
  out.mean_curve.resize(patches.cols());
  out.std_curve.resize(patches.cols());
  std::vector<double> column(patches.rows());
  for (std::size_t t = 0; t < patches.cols(); ++t) {
    for (std::size_t p = 0; p < patches.rows(); ++p) column[p] = patches(p, t);
    const MeanStd ms = PopulationMeanStd(column);
    out.mean_curve[t] = ms.mean;
    out.std_curve[t] = ms.std;
  }
  return out;
}

}  // namespace tslx
