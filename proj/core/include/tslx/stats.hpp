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

#include <cmath>
#include <span>

namespace tslx {

struct MeanStd {
  double mean;
  double std;  // population (divide by n)
};

//! Two-pass population mean/std, shifted by the first value. The shift makes
//! bit-identical inputs give a mean equal to that value and a std of exactly 0.
inline MeanStd PopulationMeanStd(std::span<const double> values) {
  if (values.empty()) return {0.0, 0.0};
  const double shift = values.front();
  double sum = 0.0;
  for (double v : values) sum += v - shift;
  const double n = static_cast<double>(values.size());
  const double mean = shift + sum / n;
  double ss = 0.0;
  for (double v : values) {
    const double d = v - mean;
    ss += d * d;
  }
  return {mean, std::sqrt(ss / n)};
}

}  // namespace tslx
