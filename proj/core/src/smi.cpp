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

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "tslx/error.hpp"
#include "tslx/stats.hpp"

namespace tslx {

namespace {

void CheckGroups(const Matrix& features, const Groups& groups) {
  if (groups.empty()) Fail(ErrorCode::kInvalidArgument, "no groups given");
  for (std::size_t g = 0; g < groups.size(); ++g) {
    if (groups[g].empty()) {
      Fail(ErrorCode::kInvalidArgument,
           "group " + std::to_string(g) + " is empty");
    }
    for (std::size_t idx : groups[g]) {
      if (idx >= features.rows()) {
        Fail(ErrorCode::kInvalidArgument,
             "group " + std::to_string(g) + " references row " +
                 std::to_string(idx) + " of " +
                 std::to_string(features.rows()));
      }
    }
  }
}

// Population mean/std of every feature column inside one group.
std::vector<MeanStd> GroupStats(const Matrix& features,
                                const std::vector<std::size_t>& members) {
  std::vector<MeanStd> out(features.cols());
  std::vector<double> column(members.size());
  for (std::size_t k = 0; k < features.cols(); ++k) {
    for (std::size_t i = 0; i < members.size(); ++i) {
      column[i] = features(members[i], k);
    }
    out[k] = PopulationMeanStd(column);
  }
  return out;
}

double DIntraFromStats(const std::vector<std::vector<MeanStd>>& stats) {
  double total = 0.0;
  for (const auto& group : stats) {
    for (const auto& s : group) total += s.std;
  }
  return total;
}

double DInterFromStats(const std::vector<std::vector<MeanStd>>& stats) {
  double total = 0.0;
  for (std::size_t i = 0; i < stats.size(); ++i) {
    for (std::size_t j = i + 1; j < stats.size(); ++j) {
      for (std::size_t k = 0; k < stats[i].size(); ++k) {
        total += std::abs(stats[i][k].mean - stats[j][k].mean);
      }
    }
  }
  return total;
}

std::vector<std::vector<MeanStd>> AllGroupStats(const Matrix& features,
                                                const Groups& groups) {
  CheckGroups(features, groups);
  std::vector<std::vector<MeanStd>> stats;
  stats.reserve(groups.size());
  for (const auto& g : groups) stats.push_back(GroupStats(features, g));
  return stats;
}

}  // namespace

Groups GroupsFromLabels(std::span<const std::size_t> labels) {
  std::map<std::size_t, std::vector<std::size_t>> by_label;
  for (std::size_t i = 0; i < labels.size(); ++i) by_label[labels[i]].push_back(i);
  Groups out;
  out.reserve(by_label.size());
  for (auto& [label, members] : by_label) out.push_back(std::move(members));
  return out;
}

void SmiConfig::Validate() const {
  if (!(a > 0.0) || !std::isfinite(a) || !(b > 0.0) || !std::isfinite(b)) {
    Fail(ErrorCode::kInvalidArgument,
         "SMI hyperparameters must satisfy a > 0, b > 0 (got a=" +
             std::to_string(a) + ", b=" + std::to_string(b) + ")");
  }
}

double DIntra(const Matrix& features, const Groups& groups) {
  return DIntraFromStats(AllGroupStats(features, groups));
}

double DInter(const Matrix& features, const Groups& groups) {
  return DInterFromStats(AllGroupStats(features, groups));
}

double Smi(double d_intra, double d_inter, const SmiConfig& cfg) {
  cfg.Validate();
  if (!(d_intra >= 0.0) || !(d_inter >= 0.0) || !std::isfinite(d_intra) ||
      !std::isfinite(d_inter)) {
    Fail(ErrorCode::kInvalidArgument,
         "SMI needs finite d_intra >= 0 and d_inter >= 0 (got " +
             std::to_string(d_intra) + ", " + std::to_string(d_inter) + ")");
  }
  if (d_intra == 0.0) return 1.0;
  return 1.0 - std::exp(-cfg.b * (cfg.a * d_inter / d_intra));
}

SmiReport ComputeSmiReport(const FeatureTable& features, const Groups& groups,
                           const std::vector<std::string>& keys,
                           const SmiConfig& cfg) {
  cfg.Validate();
  if (!keys.empty() && keys.size() != groups.size()) {
    Fail(ErrorCode::kInvalidArgument,
         std::to_string(keys.size()) + " keys given for " +
             std::to_string(groups.size()) + " groups");
  }
  const auto stats = AllGroupStats(features.values, groups);

  SmiReport report;
  report.config = cfg;
  report.n_groups = groups.size();
  report.d_intra = DIntraFromStats(stats);
  report.d_inter = DInterFromStats(stats);
  report.smi = Smi(report.d_intra, report.d_inter, cfg);
  report.per_group.reserve(groups.size());
  for (std::size_t g = 0; g < groups.size(); ++g) {
    GroupDiagnostics diag;
    diag.key = keys.empty() ? std::to_string(g) : keys[g];
    diag.size = groups[g].size();
    for (const auto& s : stats[g]) {
      diag.sigma.push_back(s.std);
      diag.mean.push_back(s.mean);
    }
    report.per_group.push_back(std::move(diag));
  }
  if (report.n_groups == 1) {
    report.warnings.push_back(
        "single group: d_inter is an empty pair sum, so SMI is 0 unless the "
        "group is internally constant");
  }
  return report;
}

double Silhouette(const Matrix& points, std::span<const std::size_t> labels) {
  const std::size_t n = points.rows();
  if (labels.size() != n) {
    Fail(ErrorCode::kInvalidArgument,
         std::to_string(labels.size()) + " labels for " + std::to_string(n) +
             " points");
  }
  // Dense cluster ids in ascending label order.
  std::map<std::size_t, std::size_t> dense;
  for (std::size_t label : labels) dense.emplace(label, 0);
  if (dense.size() < 2) {
    Fail(ErrorCode::kInvalidArgument,
         "silhouette needs at least 2 clusters, got " +
             std::to_string(dense.size()));
  }
  std::size_t next = 0;
  for (auto& [label, id] : dense) id = next++;
  const std::size_t n_clusters = dense.size();

  std::vector<std::size_t> cluster(n);
  std::vector<std::size_t> cluster_size(n_clusters, 0);
  for (std::size_t i = 0; i < n; ++i) {
    cluster[i] = dense.at(labels[i]);
    ++cluster_size[cluster[i]];
  }

  // dist_sum[i * n_clusters + c] = sum of distances from i to members of c.
  std::vector<double> dist_sum(n * n_clusters, 0.0);
  const std::size_t dim = points.cols();
  for (std::size_t i = 0; i < n; ++i) {
    const auto pi = points.row(i);
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const auto pj = points.row(j);
      double ss = 0.0;
      for (std::size_t d = 0; d < dim; ++d) {
        const double diff = pi[d] - pj[d];
        ss += diff * diff;
      }
      dist_sum[i * n_clusters + cluster[j]] += std::sqrt(ss);
    }
  }

  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t own = cluster[i];
    if (cluster_size[own] == 1) continue;
    const double a = dist_sum[i * n_clusters + own] /
                     static_cast<double>(cluster_size[own] - 1);
    double b = std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < n_clusters; ++c) {
      if (c == own) continue;
      b = std::min(b, dist_sum[i * n_clusters + c] /
                          static_cast<double>(cluster_size[c]));
    }
    const double denom = std::max(a, b);
    if (denom > 0.0) total += (b - a) / denom;
  }
  return total / static_cast<double>(n);
}

namespace {

void CheckPair(std::span<const double> y, std::span<const double> y_hat) {
  if (y.empty()) Fail(ErrorCode::kInvalidArgument, "error metric on empty input");
  if (y.size() != y_hat.size()) {
    Fail(ErrorCode::kInvalidArgument,
         "length mismatch: " + std::to_string(y.size()) + " vs " +
             std::to_string(y_hat.size()));
  }
}

}  // namespace

double Mse(std::span<const double> y, std::span<const double> y_hat) {
  CheckPair(y, y_hat);
  double sum = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    const double d = y[i] - y_hat[i];
    sum += d * d;
  }
  return sum / static_cast<double>(y.size());
}

double Mae(std::span<const double> y, std::span<const double> y_hat) {
  CheckPair(y, y_hat);
  double sum = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) sum += std::abs(y[i] - y_hat[i]);
  return sum / static_cast<double>(y.size());
}

}  // namespace tslx
