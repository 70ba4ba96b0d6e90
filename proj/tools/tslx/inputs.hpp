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

#include <filesystem>
#include <string>
#include <vector>

#include "tslx/io.hpp"
#include "tslx/matrix.hpp"
#include "tslx/smi.hpp"

namespace tslx::cli {

//! TSLX, or CSV when the extension is .csv. Errors name the file.
Matrix LoadInputMatrix(const std::filesystem::path& path);

//! Writes CSV for a .csv path, TSLX otherwise.
void SaveOutputMatrix(const std::filesystem::path& path, const Matrix& m,
                      const std::vector<std::string>& header = {});

struct GroupAssignment {
  std::vector<std::string> keys;  // first-appearance order
  Groups groups;
};

//! CSV with a header naming a `group` column and optionally a `patch`
//! column. Without `patch`, row i describes patch i. Must partition
//! patches 0..n_patches-1.
GroupAssignment ReadGroupAssignment(const std::filesystem::path& path,
                                    std::size_t n_patches);

void WriteGroupAssignment(const std::filesystem::path& path,
                          const Groups& groups,
                          const std::vector<std::string>& keys);

//! "bundled" selects the built-in lists. A file with "# name" headers is a
//! word-group file; otherwise it holds one word per line in a single group.
WordGroups LoadWords(const std::string& spec);

std::vector<std::string> FlattenWords(const WordGroups& groups);

}  // namespace tslx::cli
