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
#include "tslx/synthesis.hpp"

#include <algorithm>

#include "tslx/error.hpp"
#include "tslx/features.hpp"
#include "tslx/rng.hpp"
#include "tslx/smi.hpp"

namespace tslx {

std::string_view LevelName(Level level) {
  switch (level) {
    case Level::kZero:
      return "zero";
    case Level::kSmall:
      return "small";
    case Level::kMedian:
      return "median";
    case Level::kLarge:
      return "large";
  }
  return "unknown";
}

Level ParseLevel(std::string_view name) {
  for (Level l : {Level::kZero, Level::kSmall, Level::kMedian, Level::kLarge}) {
    if (LevelName(l) == name) return l;
  }
  Fail(ErrorCode::kInvalidArgument, "unknown level '" + std::string(name) + "'");
}

double IntraSigma(Level level) {
  switch (level) {
    case Level::kZero:
      return 0.0;
    case Level::kSmall:
      return 0.1;
    case Level::kMedian:
      return 0.5;
    case Level::kLarge:
      return 2.0;
  }
  return 0.0;
}

double InterDelta(Level level) {
  switch (level) {
    case Level::kZero:
      return 0.0;
    case Level::kSmall:
      return 0.5;
    case Level::kMedian:
      return 2.0;
    case Level::kLarge:
      return 8.0;
  }
  return 0.0;
}

void ScenarioSpec::Validate() const {
  if (intra == Level::kZero && inter == Level::kZero) {
    Fail(ErrorCode::kInvalidArgument,
         "scenario: at most one of intra/inter may be zero");
  }
  if (n_groups < 1 || patches_per_group < 1) {
    Fail(ErrorCode::kInvalidArgument,
         "scenario: n_groups and patches_per_group must be >= 1");
  }
  if (length < 3) {
    Fail(ErrorCode::kInvalidArgument,
         "scenario: patch length " + std::to_string(length) + " < 3");
  }
}

std::string ScenarioSpec::Name() const {
  const auto prefix = [](Level l) { return LevelName(l).substr(0, 1); };
  std::string out;
  out += prefix(intra);
  out += "intra_";
  out += prefix(inter);
  out += "inter";
  return out;
}

Scenario GenerateScenario(const ScenarioSpec& spec) {
  spec.Validate();
  const double sigma = IntraSigma(spec.intra);
  const double delta = InterDelta(spec.inter);
  const std::size_t len = spec.length;
  const std::size_t ppg = spec.patches_per_group;
  const bool clone_first = spec.inter == Level::kZero;
  const std::size_t generated_groups = clone_first ? 1 : spec.n_groups;

  Matrix patches(spec.n_groups * ppg, len);
  std::vector<std::size_t> labels(spec.n_groups * ppg);
  Rng rng(spec.seed);
  for (std::size_t g = 0; g < generated_groups; ++g) {
    const double level = static_cast<double>(g) * delta;
    const double slope = level / static_cast<double>(len);
    for (std::size_t p = 0; p < ppg; ++p) {
      auto row = patches.row(g * ppg + p);
      for (std::size_t t = 0; t < len; ++t) {
        const double noise = sigma * rng.StandardNormal();
        row[t] = level + slope * static_cast<double>(t) + noise;
      }
    }
  }
  for (std::size_t g = generated_groups; g < spec.n_groups; ++g) {
    for (std::size_t p = 0; p < ppg; ++p) {
      const auto src = patches.row(p);
      std::copy(src.begin(), src.end(), patches.row(g * ppg + p).begin());
    }
  }
  for (std::size_t i = 0; i < labels.size(); ++i) labels[i] = i / ppg;
  return Scenario{std::move(patches), std::move(labels)};
}

std::vector<ScenarioSpec> SweepSpecs(const ScenarioSpec& base) {
  std::vector<ScenarioSpec> specs;
  const Level grid[] = {Level::kSmall, Level::kMedian, Level::kLarge};
  for (Level intra : grid) {
    for (Level inter : grid) {
      ScenarioSpec s = base;
      s.intra = intra;
      s.inter = inter;
      specs.push_back(s);
    }
  }
  ScenarioSpec zero_intra = base;
  zero_intra.intra = Level::kZero;
  zero_intra.inter = Level::kMedian;
  specs.push_back(zero_intra);
  ScenarioSpec zero_inter = base;
  zero_inter.intra = Level::kMedian;
  zero_inter.inter = Level::kZero;
  specs.push_back(zero_inter);
  return specs;
}

std::vector<SweepRow> ValidationSweep(const ScenarioSpec& base) {
  std::vector<SweepRow> rows;
  for (const auto& spec : SweepSpecs(base)) {
    const Scenario sc = GenerateScenario(spec);
    const FeatureTable features = ExtractFeatures(sc.patches);
    const Groups groups = GroupsFromLabels(sc.labels);
    const double d_intra = DIntra(features.values, groups);
    const double d_inter = DInter(features.values, groups);
    const double silhouette = spec.n_groups >= 2
                                  ? Silhouette(StandardizeColumns(features.values),
                                               sc.labels)
                                  : 0.0;
    rows.push_back(SweepRow{spec.Name(), spec.intra, spec.inter, d_intra,
                            d_inter, Smi(d_intra, d_inter), silhouette});
  }
  return rows;
}

}  // namespace tslx
