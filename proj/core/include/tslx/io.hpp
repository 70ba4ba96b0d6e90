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
#include <string_view>
#include <unordered_map>
#include <vector>

#include "tslx/matrix.hpp"

namespace tslx {

using Warnings = std::vector<std::string>;

// TSLX container layout (all little-endian):
//   0  magic "TSLX"
//   4  version u8 (=1)
//   5  dtype u8 (1=f32, 2=f64)
//   6  reserved u16 (=0)
//   8  rows u64
//  16  cols u64
//  24  rows*cols values, row-major
inline constexpr char kTslxMagic[4] = {'T', 'S', 'L', 'X'};
inline constexpr std::uint8_t kTslxVersion = 1;
inline constexpr std::size_t kTslxHeaderSize = 24;

void WriteMatrix(const std::filesystem::path& path, const Matrix& m);
std::vector<char> EncodeMatrix(const Matrix& m);

Matrix ReadMatrix(const std::filesystem::path& path);
//! Decodes an in-memory TSLX image; `origin` is used in error messages.
Matrix DecodeMatrix(std::string_view bytes, std::string_view origin);

struct CsvMatrix {
  Matrix matrix;
  std::vector<std::string> header;  // empty when the file had none
};

CsvMatrix ReadMatrixCsv(const std::filesystem::path& path);
CsvMatrix ParseMatrixCsv(std::string_view text, std::string_view origin);
void WriteCsv(const std::filesystem::path& path, const Matrix& m,
              const std::vector<std::string>& header = {});
std::string FormatCsv(const Matrix& m,
                      const std::vector<std::string>& header = {});

//! Shortest text that round-trips through strtod: 17 significant digits.
std::string FormatReal(double v);

//! Reads `.csv` files as CSV and everything else as TSLX.
Matrix LoadMatrix(const std::filesystem::path& path);

//! Ordered token strings; row i of the paired embedding matrix is token i.
class TokenVocab {
 public:
  explicit TokenVocab(std::vector<std::string> tokens);

  std::size_t size() const noexcept { return tokens_.size(); }
  const std::string& operator[](std::size_t i) const { return tokens_[i]; }
  const std::vector<std::string>& tokens() const noexcept { return tokens_; }

  //! Lowest index holding exactly `token`.
  std::optional<std::size_t> Find(std::string_view token) const;

  //! Throws unless size() equals the embedding row count.
  void CheckPairing(const Matrix& embeddings) const;

 private:
  std::vector<std::string> tokens_;
  std::unordered_map<std::string, std::size_t> first_index_;
};

TokenVocab ReadVocab(const std::filesystem::path& path,
                     Warnings* warnings = nullptr);
TokenVocab ParseVocab(std::string_view text, std::string_view origin,
                      Warnings* warnings = nullptr);

//! Plain line list (row/column labels). Same rules as the vocab format.
std::vector<std::string> ReadLines(const std::filesystem::path& path);

struct WordGroup {
  std::string name;
  std::vector<std::string> words;
};

//! Named, non-empty word lists with unique names.
struct WordGroups {
  std::vector<WordGroup> groups;

  std::size_t total_words() const;
  void Validate() const;
};

//! "# name" header lines open a group; other non-blank lines are words.
WordGroups ReadWordGroups(const std::filesystem::path& path);
WordGroups ParseWordGroups(std::string_view text, std::string_view origin);

enum class DatasetRole {
  kVocabEmbeddings,
  kPrototypes,
  kAlignedPatches,
  kRawPatches,
  kAttention,
  kPromptEmbeddings,
};

std::string_view DatasetRoleName(DatasetRole role);
DatasetRole ParseDatasetRole(std::string_view name);

//! JSON sidecar `<file>.meta.json` describing where a matrix came from.
struct DatasetDescriptor {
  std::string name;
  DatasetRole role;
  std::string source;
};

std::filesystem::path DescriptorPath(const std::filesystem::path& data_path);
void WriteDescriptor(const std::filesystem::path& path,
                     const DatasetDescriptor& d);
DatasetDescriptor ReadDescriptor(const std::filesystem::path& path);

bool IsValidUtf8(std::string_view text);

std::string ReadFileBytes(const std::filesystem::path& path);
void WriteFileBytes(const std::filesystem::path& path, std::string_view bytes);

}  // namespace tslx
