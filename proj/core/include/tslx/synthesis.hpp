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
#include <string>
#include <string_view>
#include <vector>

#include "tslx/matrix.hpp"

namespace tslx {

enum class Level { kZero, kSmall, kMedian, kLarge };

std::string_view LevelName(Level level);
Level ParseLevel(std::string_view name);

//! Noise std per intra level: zero 0, small 0.1, median 0.5, large 2.0.
double IntraSigma(Level level);
//! Group spacing per inter level: zero 0, small 0.5, median 2.0, large 8.0.
double InterDelta(Level level);

struct ScenarioSpec {
  Level intra = Level::kMedian;
  Level inter = Level::kMedian;
  std::size_t n_groups = 5;
  std::size_t patches_per_group = 20;
  std::size_t length = 16;
  std::uint64_t seed = 42;

  void Validate() const;
  //! "sintra_linter" style: s/m/l/z prefix per level.
  std::string Name() const;
};

struct Scenario {
  Matrix patches;                   // (n_groups * patches_per_group) x length
  std::vector<std::size_t> labels;  // group index per patch row
};

//! Group i has level c_i = i*delta and slope s_i = i*delta/L; each patch is
//! x_t = c_i + s_i*t + N(0, sigma^2), drawn group by group, patch by patch,
//! t ascending from one xoshiro256** stream seeded with spec.seed.
//!
//! With inter == zero, group 0's patches are generated and cloned into every
//! other group, so feature means across groups are bit-identical.
Scenario GenerateScenario(const ScenarioSpec& spec);

struct SweepRow {
  std::string name;
  Level intra;
  Level inter;
  double d_intra;
  double d_inter;
  double smi;
  double silhouette;
};

//! The nine {small, median, large}^2 specs in intra-major order, then
//! zero-intra/median-inter and median-intra/zero-inter. Sizes and seed come
//! from `base`; its levels are ignored.
std::vector<ScenarioSpec> SweepSpecs(const ScenarioSpec& base);

//! Generates every sweep scenario, extracts features, and scores the
//! generated labels with SMI (default config) and with silhouette over the
//! column-standardized feature table.
std::vector<SweepRow> ValidationSweep(const ScenarioSpec& base);

}  // namespace tslx
