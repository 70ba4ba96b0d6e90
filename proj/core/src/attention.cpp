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
#include "tslx/attention.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "tslx/align.hpp"
#include "tslx/csv.hpp"
#include "tslx/error.hpp"

namespace tslx {

void AttentionView::Validate(Warnings* warnings) const {
  if (!row_labels.empty() && row_labels.size() != weights.rows()) {
    Fail(ErrorCode::kInvalidData,
         std::to_string(row_labels.size()) + " row labels for " +
             std::to_string(weights.rows()) + " rows");
  }
  if (!col_labels.empty() && col_labels.size() != weights.cols()) {
    Fail(ErrorCode::kInvalidData,
         std::to_string(col_labels.size()) + " column labels for " +
             std::to_string(weights.cols()) + " columns");
  }
  if (boundary && *boundary > weights.cols()) {
    Fail(ErrorCode::kInvalidArgument,
         "boundary " + std::to_string(*boundary) + " exceeds " +
             std::to_string(weights.cols()) + " columns");
  }
  std::size_t off_rows = 0;
  std::size_t first_off = 0;
  for (std::size_t r = 0; r < weights.rows(); ++r) {
    double sum = 0.0;
    for (std::size_t c = 0; c < weights.cols(); ++c) {
      const double w = weights(r, c);
      if (w < 0.0) {
        Fail(ErrorCode::kInvalidData,
             "negative attention weight at row " + std::to_string(r) +
                 ", col " + std::to_string(c));
      }
      sum += w;
    }
    if (std::abs(sum - 1.0) > kRowSumTolerance) {
      if (row_stochastic) {
        Fail(ErrorCode::kInvalidData,
             "row " + std::to_string(r) + " sums to " + FormatReal(sum) +
                 ", declared row-stochastic (tolerance 1e-4)");
      }
      if (off_rows++ == 0) first_off = r;
    }
  }
  if (off_rows > 0 && warnings) {
    warnings->push_back(std::to_string(off_rows) +
                        " attention row(s) do not sum to 1 (first: row " +
                        std::to_string(first_off) +
                        "); treating weights as unnormalised scores");
  }
}

std::string AttentionView::RowLabel(std::size_t r) const {
  return row_labels.empty() ? std::to_string(r) : row_labels[r];
}

std::string AttentionView::ColLabel(std::size_t c) const {
  return col_labels.empty() ? std::to_string(c) : col_labels[c];
}

namespace {

void CheckK(const AttentionView& view, std::size_t k) {
  if (k < 1 || k > view.weights.cols()) {
    Fail(ErrorCode::kInvalidArgument,
         "k=" + std::to_string(k) + " outside [1, " +
             std::to_string(view.weights.cols()) + "]");
  }
}

}  // namespace

std::vector<std::vector<AttendedEntry>> TopKAttended(const AttentionView& view,
                                                     std::size_t k) {
  view.Validate();
  CheckK(view, k);
  std::vector<std::vector<AttendedEntry>> out(view.weights.rows());
  for (std::size_t r = 0; r < view.weights.rows(); ++r) {
    for (std::size_t c : TopKRow(view.weights.row(r), k)) {
      out[r].push_back(AttendedEntry{c, view.ColLabel(c), view.weights(r, c)});
    }
  }
  return out;
}

PrototypeDominance ComputePrototypeDominance(const AttentionView& view,
                                             std::size_t k) {
  view.Validate();
  CheckK(view, k);
  PrototypeDominance out;
  out.appearances.assign(view.weights.cols(), 0);
  for (std::size_t r = 0; r < view.weights.rows(); ++r) {
    for (std::size_t c : TopKRow(view.weights.row(r), k)) ++out.appearances[c];
  }
  const auto never = static_cast<double>(
      std::count(out.appearances.begin(), out.appearances.end(), 0u));
  out.never_fraction = never / static_cast<double>(view.weights.cols());
  out.max_col = static_cast<std::size_t>(
      std::max_element(out.appearances.begin(), out.appearances.end()) -
      out.appearances.begin());
  out.max_share = static_cast<double>(out.appearances[out.max_col]) /
                  static_cast<double>(view.weights.rows());
  return out;
}

ModalityLinkage ComputeModalityLinkage(const AttentionView& view,
                                       std::size_t k) {
  view.Validate();
  CheckK(view, k);
  if (!view.boundary) {
    Fail(ErrorCode::kInvalidArgument,
         "modality linkage needs a prompt/patch boundary");
  }
  const std::size_t b = *view.boundary;
  const std::size_t n = view.weights.cols();
  if (view.weights.rows() != n) {
    Fail(ErrorCode::kInvalidArgument,
         "modality linkage needs square self-attention, got " +
             std::to_string(view.weights.rows()) + "x" + std::to_string(n));
  }
  if (b == 0 || b >= n) {
    Fail(ErrorCode::kInvalidArgument,
         "boundary " + std::to_string(b) + " must lie in [1, " +
             std::to_string(n - 1) + "]");
  }

  std::size_t prompt_in = 0;
  std::size_t prompt_cross = 0;
  std::size_t patch_in = 0;
  std::size_t patch_cross = 0;
  double first_mass = 0.0;
  for (std::size_t r = 0; r < n; ++r) {
    const bool prompt_row = r < b;
    for (std::size_t c : TopKRow(view.weights.row(r), k)) {
      const bool prompt_col = c < b;
      if (prompt_row) {
        (prompt_col ? prompt_in : prompt_cross)++;
      } else {
        (prompt_col ? patch_cross : patch_in)++;
      }
    }
    first_mass += view.weights(r, 0);
  }
  const double prompt_slots = static_cast<double>(b * k);
  const double patch_slots = static_cast<double>((n - b) * k);
  ModalityLinkage out;
  out.prompt_rows_topk_in_prompt_frac = prompt_in / prompt_slots;
  out.prompt_rows_cross_frac = prompt_cross / prompt_slots;
  out.patch_rows_topk_in_patch_frac = patch_in / patch_slots;
  out.patch_rows_cross_frac = patch_cross / patch_slots;
  out.cross_modal_topk_frac =
      static_cast<double>(prompt_cross + patch_cross) / (prompt_slots + patch_slots);
  out.first_column_mass_mean = first_mass / static_cast<double>(n);
  return out;
}

std::string FormatHeatmap(const AttentionView& view) {
  view.Validate();
  std::vector<std::string> header{"label"};
  for (std::size_t c = 0; c < view.weights.cols(); ++c) {
    header.push_back(view.ColLabel(c));
  }
  std::string out = FormatCsvRecord(header);
  for (std::size_t r = 0; r < view.weights.rows(); ++r) {
    out += QuoteCsvField(view.RowLabel(r));
    for (double w : view.weights.row(r)) {
      out += ',';
      out += FormatReal(w);
    }
    out += '\n';
  }
  return out;
}

void ExportHeatmap(const AttentionView& view,
                   const std::filesystem::path& path) {
  WriteFileBytes(path, FormatHeatmap(view));
}

AttentionView ParseHeatmap(std::string_view text, std::string_view origin) {
  const std::string where(origin);
  const auto records = ParseCsvRecords(text, origin);
  if (records.size() < 2) {
    Fail(ErrorCode::kFormat, where + ": heatmap needs a header and >= 1 row");
  }
  const auto& header = records.front().fields;
  if (header.size() < 2) {
    Fail(ErrorCode::kFormat, where + ": heatmap header has no columns");
  }
  const std::size_t cols = header.size() - 1;
  AttentionView view{Matrix(records.size() - 1, cols), {},
                     {header.begin() + 1, header.end()}, std::nullopt, false};
  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& rec = records[r];
    if (rec.fields.size() != cols + 1) {
      Fail(ErrorCode::kFormat, where + ": ragged row at line " +
                                   std::to_string(rec.line));
    }
    view.row_labels.push_back(rec.fields.front());
    for (std::size_t c = 0; c < cols; ++c) {
      const auto& cell = rec.fields[c + 1];
      double v = 0.0;
      auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
      if (ec != std::errc() || ptr != cell.data() + cell.size() ||
          !std::isfinite(v)) {
        Fail(ErrorCode::kFormat, where + ": bad value '" + cell + "' at line " +
                                     std::to_string(rec.line) + ", column " +
                                     std::to_string(c + 2));
      }
      view.weights(r - 1, c) = v;
    }
  }
  return view;
}

AttentionView ImportHeatmap(const std::filesystem::path& path) {
  return ParseHeatmap(ReadFileBytes(path), path.string());
}

}  // namespace tslx
