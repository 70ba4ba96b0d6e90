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
#include "inputs.hpp"

#include <algorithm>
#include <charconv>
#include <map>

#include "tslx/csv.hpp"
#include "tslx/error.hpp"
#include "tslx/wordlists.hpp"

namespace tslx::cli {

namespace {

bool IsCsv(const std::filesystem::path& path) {
  auto ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return ext == ".csv";
}

}  // namespace

Matrix LoadInputMatrix(const std::filesystem::path& path) {
  try {
    return LoadMatrix(path);
  } catch (const Error& e) {
    const std::string msg = e.what();
    if (msg.find(path.string()) != std::string::npos) throw;
    Fail(e.code(), path.string() + ": " + msg);
  }
}

void SaveOutputMatrix(const std::filesystem::path& path, const Matrix& m,
                      const std::vector<std::string>& header) {
  if (IsCsv(path)) {
    WriteCsv(path, m, header);
  } else {
    WriteMatrix(path, m);
  }
}

GroupAssignment ReadGroupAssignment(const std::filesystem::path& path,
                                    std::size_t n_patches) {
  const std::string where = path.string();
  const auto records = ParseCsvRecords(ReadFileBytes(path), where);
  if (records.empty()) Fail(ErrorCode::kFormat, where + ": empty groups file");
  const auto& header = records.front().fields;
  const auto col = [&](std::string_view name) -> std::optional<std::size_t> {
    const auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) return std::nullopt;
    return static_cast<std::size_t>(it - header.begin());
  };
  const auto group_col = col("group");
  if (!group_col) {
    Fail(ErrorCode::kFormat, where + ": header must name a 'group' column");
  }
  const auto patch_col = col("patch");
  const std::size_t rows = records.size() - 1;
  if (rows != n_patches) {
    Fail(ErrorCode::kInvalidData,
         where + ": " + std::to_string(rows) + " assignments for " +
             std::to_string(n_patches) + " patches (must partition all patches)");
  }

  GroupAssignment out;
  std::map<std::string, std::size_t> slot;
  std::vector<bool> seen(n_patches, false);
  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& rec = records[r];
    if (rec.fields.size() != header.size()) {
      Fail(ErrorCode::kFormat, where + ": ragged row at line " +
                                   std::to_string(rec.line));
    }
    std::size_t patch = r - 1;
    if (patch_col) {
      const auto& cell = rec.fields[*patch_col];
      const auto [ptr, ec] =
          std::from_chars(cell.data(), cell.data() + cell.size(), patch);
      if (ec != std::errc() || ptr != cell.data() + cell.size() ||
          patch >= n_patches) {
        Fail(ErrorCode::kInvalidData,
             where + ": line " + std::to_string(rec.line) + ": patch '" + cell +
                 "' is not an index in [0, " + std::to_string(n_patches) + ")");
      }
    }
    if (seen[patch]) {
      Fail(ErrorCode::kInvalidData, where + ": line " + std::to_string(rec.line) +
                                        ": patch " + std::to_string(patch) +
                                        " assigned twice");
    }
    seen[patch] = true;
    const auto& key = rec.fields[*group_col];
    auto [it, inserted] = slot.try_emplace(key, out.keys.size());
    if (inserted) {
      out.keys.push_back(key);
      out.groups.emplace_back();
    }
    out.groups[it->second].push_back(patch);
  }
  for (auto& g : out.groups) std::sort(g.begin(), g.end());
  return out;
}

void WriteGroupAssignment(const std::filesystem::path& path,
                          const Groups& groups,
                          const std::vector<std::string>& keys) {
  std::vector<std::pair<std::size_t, std::size_t>> rows;  // patch, group
  for (std::size_t g = 0; g < groups.size(); ++g) {
    for (std::size_t p : groups[g]) rows.emplace_back(p, g);
  }
  std::sort(rows.begin(), rows.end());
  std::string text = FormatCsvRecord({"patch", "group"});
  for (const auto& [p, g] : rows) {
    text += FormatCsvRecord({std::to_string(p), keys[g]});
  }
  WriteFileBytes(path, text);
}

WordGroups LoadWords(const std::string& spec) {
  if (spec == "bundled") return LoadBundledWordGroups();
  const std::string text = ReadFileBytes(spec);
  const bool grouped = text.starts_with('#') || text.find("\n#") != std::string::npos;
  WordGroups out = ParseWordGroups(grouped ? text : "# words\n" + text, spec);
  out.Validate();
  return out;
}

std::vector<std::string> FlattenWords(const WordGroups& groups) {
  std::vector<std::string> out;
  for (const auto& g : groups.groups) {
    out.insert(out.end(), g.words.begin(), g.words.end());
  }
  return out;
}

}  // namespace tslx::cli
