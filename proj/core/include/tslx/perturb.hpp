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

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "tslx/io.hpp"
#include "tslx/matrix.hpp"

namespace tslx {

enum class PerturbMode { kGaussianFit, kUniformRange };

std::string_view PerturbModeName(PerturbMode mode);
PerturbMode ParsePerturbMode(std::string_view name);

struct PerturbConfig {
  double ratio = 0.0;
  std::uint64_t seed = 0;
  PerturbMode mode = PerturbMode::kGaussianFit;

  void Validate() const;
};

struct PerturbResult {
  Matrix perturbed;
  std::size_t changed_count = 0;       // selected positions
  std::vector<std::size_t> positions;  // flat row-major, selection order
  double fit_mean = 0.0;               // over all original entries
  double fit_std = 0.0;                // population
  double min = 0.0;
  double max = 0.0;
  PerturbMode effective_mode = PerturbMode::kGaussianFit;
  Warnings warnings;
};

//! Number of positions replaced for `ratio` of `n` values: round(ratio * n).
std::size_t ReplacementCount(double ratio, std::size_t n);

//! Replaces exactly ReplacementCount(ratio, N) values, chosen by a seeded
//! Fisher-Yates prefix over flat indices, with draws from Normal(mean, std^2)
//! fitted to all original entries, or from Uniform[min, max]. Positions are
//! drawn first, then values in selection order, from one stream. A zero
//! fitted std falls back to the uniform mode with a warning. Unselected
//! entries are bit-identical to the input.
PerturbResult ReplaceValues(const Matrix& embeddings, const PerturbConfig& cfg);

}  // namespace tslx
