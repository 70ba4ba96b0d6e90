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
#include <span>
#include <string>
#include <vector>

#include "tslx/features.hpp"
#include "tslx/matrix.hpp"

namespace tslx {

//! Row indices of each group, in group order.
using Groups = std::vector<std::vector<std::size_t>>;

//! Groups keyed by label value, ascending; members in index order.
Groups GroupsFromLabels(std::span<const std::size_t> labels);

struct SmiConfig {
  double a = 0.5;
  double b = 0.1;

  void Validate() const;
};

//! Sum over groups and feature columns of the population std of that
//! feature inside the group. Every group must be non-empty.
double DIntra(const Matrix& features, const Groups& groups);

//! Sum over group pairs i < j and feature columns of |mean_i - mean_j|.
//! Exactly 0 for a single group.
double DInter(const Matrix& features, const Groups& groups);

//! 1 - exp(-b * (a * d_inter / d_intra)); exactly 1 when d_intra == 0.
double Smi(double d_intra, double d_inter, const SmiConfig& cfg = {});

struct GroupDiagnostics {
  std::string key;
  std::size_t size = 0;
  std::vector<double> sigma;  // per feature
  std::vector<double> mean;   // per feature
};

struct SmiReport {
  double d_intra = 0.0;
  double d_inter = 0.0;
  double smi = 0.0;
  std::size_t n_groups = 0;
  std::vector<GroupDiagnostics> per_group;
  SmiConfig config;
  std::vector<std::string> warnings;
};

//! Full report over a feature table. `keys` may be empty (groups are then
//! named by position) or must match `groups` in length.
SmiReport ComputeSmiReport(const FeatureTable& features, const Groups& groups,
                           const std::vector<std::string>& keys = {},
                           const SmiConfig& cfg = {});

//! Mean silhouette over points using Euclidean distance between rows.
//! Points in singleton clusters contribute 0, as do points with
//! max(a, b) == 0. Requires at least two distinct labels.
double Silhouette(const Matrix& points, std::span<const std::size_t> labels);

double Mse(std::span<const double> y, std::span<const double> y_hat);
double Mae(std::span<const double> y, std::span<const double> y_hat);

}  // namespace tslx
