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
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "tslx/io.hpp"
#include "tslx/matrix.hpp"

namespace tslx {

//! One (already head-reduced) attention matrix with labels. Columns
//! [0, boundary) are prompt tokens, [boundary, cols) patch tokens.
struct AttentionView {
  Matrix weights;
  std::vector<std::string> row_labels;  // empty: rows named by index
  std::vector<std::string> col_labels;  // empty: columns named by index
  std::optional<std::size_t> boundary;
  bool row_stochastic = false;

  //! Rejects negative weights and mislabelled axes. Rows that do not sum to
  //! 1 within 1e-4 are an error when row_stochastic is declared and a
  //! warning otherwise.
  void Validate(Warnings* warnings = nullptr) const;

  std::string RowLabel(std::size_t r) const;
  std::string ColLabel(std::size_t c) const;
};

inline constexpr double kRowSumTolerance = 1e-4;

struct AttendedEntry {
  std::size_t col;
  std::string label;
  double weight;
};

//! Per row, the k largest weights descending (ties by ascending column).
//! Repeated labels are kept.
std::vector<std::vector<AttendedEntry>> TopKAttended(const AttentionView& view,
                                                     std::size_t k);

struct PrototypeDominance {
  std::vector<std::size_t> appearances;  // per column: rows whose top-k has it
  double never_fraction = 0.0;  // share of columns in no row's top-k
  std::size_t max_col = 0;      // most-appearing column (lowest on ties)
  double max_share = 0.0;       // appearances[max_col] / rows
};

PrototypeDominance ComputePrototypeDominance(const AttentionView& view,
                                             std::size_t k);

struct ModalityLinkage {
  double prompt_rows_topk_in_prompt_frac = 0.0;
  double patch_rows_topk_in_patch_frac = 0.0;
  double prompt_rows_cross_frac = 0.0;
  double patch_rows_cross_frac = 0.0;
  double cross_modal_topk_frac = 0.0;  // over all rows
  double first_column_mass_mean = 0.0;
};

//! Self-attention over [prompt tokens | patch tokens]: the square matrix's
//! rows follow the same split as its columns. Requires 0 < boundary < cols.
ModalityLinkage ComputeModalityLinkage(const AttentionView& view, std::size_t k);

//! CSV: header "label,<col labels...>", then "<row label>,<values...>".
void ExportHeatmap(const AttentionView& view, const std::filesystem::path& path);
std::string FormatHeatmap(const AttentionView& view);
AttentionView ImportHeatmap(const std::filesystem::path& path);
AttentionView ParseHeatmap(std::string_view text, std::string_view origin);

}  // namespace tslx
