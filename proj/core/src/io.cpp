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
#include "tslx/io.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstring>
#include <fstream>
#include <limits>
#include <nlohmann/json.hpp>
#include <sstream>

#include "tslx/csv.hpp"
#include "tslx/error.hpp"

namespace tslx {

static_assert(std::endian::native == std::endian::little ||
                  std::endian::native == std::endian::big,
              "mixed-endian platforms are not supported");

namespace {

template <typename U>
void PutLe(std::vector<char>& out, U value) {
  for (std::size_t i = 0; i < sizeof(U); ++i) {
    out.push_back(static_cast<char>((value >> (8 * i)) & 0xFF));
  }
}

template <typename U>
U GetLe(const char* p) {
  U value = 0;
  for (std::size_t i = 0; i < sizeof(U); ++i) {
    value |= static_cast<U>(static_cast<unsigned char>(p[i])) << (8 * i);
  }
  return value;
}

std::string Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return std::string(s.substr(first, last - first + 1));
}

std::optional<double> ParseNumber(std::string_view cell) {
  std::string trimmed = Trim(cell);
  if (trimmed.empty()) return std::nullopt;
  const char* first = trimmed.data();
  const char* last = first + trimmed.size();
  if (*first == '+') ++first;
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) return std::nullopt;
  return value;
}

// Splits on '\n'; a final terminator does not produce an extra line.
std::vector<std::string_view> SplitLines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    const auto nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  return lines;
}

}  // namespace

std::string ReadFileBytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) Fail(ErrorCode::kIo, path.string() + ": cannot open for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) Fail(ErrorCode::kIo, path.string() + ": read failed");
  return std::move(ss).str();
}

void WriteFileBytes(const std::filesystem::path& path, std::string_view bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) Fail(ErrorCode::kIo, path.string() + ": cannot open for writing");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  out.flush();
  if (!out) Fail(ErrorCode::kIo, path.string() + ": write failed");
}

std::vector<char> EncodeMatrix(const Matrix& m) {
  CheckFinite(m, "write_matrix");
  const std::size_t width = DTypeSize(m.dtype());
  std::vector<char> out;
  out.reserve(kTslxHeaderSize + m.size() * width);
  for (char c : kTslxMagic) out.push_back(c);
  out.push_back(static_cast<char>(kTslxVersion));
  out.push_back(static_cast<char>(m.dtype()));
  PutLe<std::uint16_t>(out, 0);
  PutLe<std::uint64_t>(out, m.rows());
  PutLe<std::uint64_t>(out, m.cols());
  auto data = m.data();
  for (std::size_t i = 0; i < data.size(); ++i) {
    if (m.dtype() == DType::kF32) {
      const float narrowed = static_cast<float>(data[i]);
      if (!std::isfinite(narrowed)) {
        Fail(ErrorCode::kInvalidData,
             "write_matrix: value at flat index " + std::to_string(i) +
                 " overflows f32");
      }
      PutLe<std::uint32_t>(out, std::bit_cast<std::uint32_t>(narrowed));
    } else {
      PutLe<std::uint64_t>(out, std::bit_cast<std::uint64_t>(data[i]));
    }
  }
  return out;
}

void WriteMatrix(const std::filesystem::path& path, const Matrix& m) {
  const auto bytes = EncodeMatrix(m);
  WriteFileBytes(path, std::string_view(bytes.data(), bytes.size()));
}

Matrix DecodeMatrix(std::string_view bytes, std::string_view origin) {
  const std::string where(origin);
  if (bytes.size() < kTslxHeaderSize) {
    Fail(ErrorCode::kFormat,
         where + ": truncated header: expected at least " +
             std::to_string(kTslxHeaderSize) + " bytes, got " +
             std::to_string(bytes.size()));
  }
  const char* p = bytes.data();
  if (std::memcmp(p, kTslxMagic, 4) != 0) {
    Fail(ErrorCode::kFormat, where + ": bad magic at offset 0 (expected TSLX)");
  }
  const auto version = static_cast<std::uint8_t>(p[4]);
  if (version != kTslxVersion) {
    Fail(ErrorCode::kFormat, where + ": unsupported version " +
                                 std::to_string(version) + " at offset 4");
  }
  const auto dtype_tag = static_cast<std::uint8_t>(p[5]);
  if (dtype_tag != 1 && dtype_tag != 2) {
    Fail(ErrorCode::kFormat, where + ": unsupported dtype " +
                                 std::to_string(dtype_tag) + " at offset 5");
  }
  const auto dtype = static_cast<DType>(dtype_tag);
  if (GetLe<std::uint16_t>(p + 6) != 0) {
    Fail(ErrorCode::kFormat, where + ": reserved field at offset 6 is not 0");
  }
  const auto rows = GetLe<std::uint64_t>(p + 8);
  const auto cols = GetLe<std::uint64_t>(p + 16);
  if (rows == 0 || cols == 0) {
    Fail(ErrorCode::kFormat, where + ": shape " + std::to_string(rows) + "x" +
                                 std::to_string(cols) +
                                 " violates rows >= 1, cols >= 1");
  }
  const std::size_t width = DTypeSize(dtype);
  const std::size_t payload_limit =
      (std::numeric_limits<std::size_t>::max() - kTslxHeaderSize) / width;
  if (rows > payload_limit / cols) {
    Fail(ErrorCode::kFormat, where + ": truncated payload: shape " +
                                 std::to_string(rows) + "x" +
                                 std::to_string(cols) + " exceeds file size " +
                                 std::to_string(bytes.size()));
  }
  const std::size_t count = rows * cols;
  const std::size_t expected = kTslxHeaderSize + count * width;
  if (bytes.size() < expected) {
    Fail(ErrorCode::kFormat, where + ": truncated payload: expected " +
                                 std::to_string(expected) + " bytes, got " +
                                 std::to_string(bytes.size()));
  }
  if (bytes.size() > expected) {
    Fail(ErrorCode::kFormat, where + ": " +
                                 std::to_string(bytes.size() - expected) +
                                 " trailing bytes after payload (expected " +
                                 std::to_string(expected) + " bytes)");
  }
  std::vector<double> data(count);
  const char* payload = p + kTslxHeaderSize;
  for (std::size_t i = 0; i < count; ++i) {
    double v;
    if (dtype == DType::kF32) {
      v = std::bit_cast<float>(GetLe<std::uint32_t>(payload + 4 * i));
    } else {
      v = std::bit_cast<double>(GetLe<std::uint64_t>(payload + 8 * i));
    }
    if (!std::isfinite(v)) {
      Fail(ErrorCode::kInvalidData,
           where + ": non-finite value at row " + std::to_string(i / cols) +
               ", col " + std::to_string(i % cols) + " (offset " +
               std::to_string(kTslxHeaderSize + i * width) + ")");
    }
    data[i] = v;
  }
  return Matrix(rows, cols, std::move(data), dtype);
}

Matrix ReadMatrix(const std::filesystem::path& path) {
  const std::string bytes = ReadFileBytes(path);
  return DecodeMatrix(bytes, path.string());
}

std::string FormatReal(double v) {
  char buf[64];
  auto [ptr, ec] =
      std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  return std::string(buf, ptr);
}

CsvMatrix ParseMatrixCsv(std::string_view text, std::string_view origin) {
  const std::string where(origin);
  const auto records = ParseCsvRecords(text, origin);
  if (records.empty()) Fail(ErrorCode::kFormat, where + ": empty CSV");

  CsvMatrix result{Matrix(1, 1), {}};
  std::size_t first = 0;
  const auto& head = records.front().fields;
  if (std::any_of(head.begin(), head.end(),
                  [](const std::string& c) { return !ParseNumber(c); })) {
    result.header = head;
    first = 1;
  }
  if (first >= records.size()) {
    Fail(ErrorCode::kFormat, where + ": CSV has a header but no data rows");
  }
  const std::size_t cols = records[first].fields.size();
  if (!result.header.empty() && result.header.size() != cols) {
    Fail(ErrorCode::kFormat,
         where + ": ragged row at line " +
             std::to_string(records[first].line) + ": expected " +
             std::to_string(result.header.size()) + " fields, got " +
             std::to_string(cols));
  }
  std::vector<double> data;
  data.reserve((records.size() - first) * cols);
  for (std::size_t r = first; r < records.size(); ++r) {
    const auto& rec = records[r];
    if (rec.fields.size() != cols) {
      Fail(ErrorCode::kFormat, where + ": ragged row at line " +
                                   std::to_string(rec.line) + ": expected " +
                                   std::to_string(cols) + " fields, got " +
                                   std::to_string(rec.fields.size()));
    }
    for (std::size_t c = 0; c < cols; ++c) {
      const auto value = ParseNumber(rec.fields[c]);
      if (!value) {
        Fail(ErrorCode::kFormat, where + ": non-numeric cell '" +
                                     rec.fields[c] + "' at line " +
                                     std::to_string(rec.line) + ", column " +
                                     std::to_string(c + 1));
      }
      if (!std::isfinite(*value)) {
        Fail(ErrorCode::kInvalidData,
             where + ": non-finite cell at line " + std::to_string(rec.line) +
                 ", column " + std::to_string(c + 1));
      }
      data.push_back(*value);
    }
  }
  result.matrix =
      Matrix(records.size() - first, cols, std::move(data), DType::kF64);
  return result;
}

CsvMatrix ReadMatrixCsv(const std::filesystem::path& path) {
  return ParseMatrixCsv(ReadFileBytes(path), path.string());
}

std::string FormatCsv(const Matrix& m, const std::vector<std::string>& header) {
  if (!header.empty() && header.size() != m.cols()) {
    Fail(ErrorCode::kInvalidArgument,
         "CSV header has " + std::to_string(header.size()) +
             " names for " + std::to_string(m.cols()) + " columns");
  }
  CheckFinite(m, "write_csv");
  std::string out;
  if (!header.empty()) out += FormatCsvRecord(header);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out += ',';
      out += FormatReal(m(r, c));
    }
    out += '\n';
  }
  return out;
}

void WriteCsv(const std::filesystem::path& path, const Matrix& m,
              const std::vector<std::string>& header) {
  WriteFileBytes(path, FormatCsv(m, header));
}

Matrix LoadMatrix(const std::filesystem::path& path) {
  auto ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char ch) { return std::tolower(ch); });
  if (ext == ".csv") return ReadMatrixCsv(path).matrix;
  return ReadMatrix(path);
}

bool IsValidUtf8(std::string_view text) {
  std::size_t i = 0;
  const auto byte = [&](std::size_t k) {
    return static_cast<unsigned char>(text[k]);
  };
  while (i < text.size()) {
    const unsigned char c = byte(i);
    std::size_t len;
    std::uint32_t cp;
    if (c < 0x80) {
      ++i;
      continue;
    } else if ((c & 0xE0) == 0xC0) {
      len = 2;
      cp = c & 0x1F;
    } else if ((c & 0xF0) == 0xE0) {
      len = 3;
      cp = c & 0x0F;
    } else if ((c & 0xF8) == 0xF0) {
      len = 4;
      cp = c & 0x07;
    } else {
      return false;
    }
    if (i + len > text.size()) return false;
    for (std::size_t k = 1; k < len; ++k) {
      if ((byte(i + k) & 0xC0) != 0x80) return false;
      cp = (cp << 6) | (byte(i + k) & 0x3F);
    }
    // Overlong forms, surrogates and out-of-range code points.
    if ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) ||
        (len == 4 && cp < 0x10000) || cp > 0x10FFFF ||
        (cp >= 0xD800 && cp <= 0xDFFF)) {
      return false;
    }
    i += len;
  }
  return true;
}

TokenVocab::TokenVocab(std::vector<std::string> tokens)
    : tokens_(std::move(tokens)) {
  if (tokens_.empty()) Fail(ErrorCode::kInvalidData, "vocab must be non-empty");
  first_index_.reserve(tokens_.size());
  for (std::size_t i = 0; i < tokens_.size(); ++i) {
    first_index_.try_emplace(tokens_[i], i);
  }
}

std::optional<std::size_t> TokenVocab::Find(std::string_view token) const {
  auto it = first_index_.find(std::string(token));
  if (it == first_index_.end()) return std::nullopt;
  return it->second;
}

void TokenVocab::CheckPairing(const Matrix& embeddings) const {
  if (embeddings.rows() != tokens_.size()) {
    Fail(ErrorCode::kInvalidData,
         "vocab has " + std::to_string(tokens_.size()) +
             " tokens but embedding matrix has " +
             std::to_string(embeddings.rows()) + " rows");
  }
}

TokenVocab ParseVocab(std::string_view text, std::string_view origin,
                      Warnings* warnings) {
  const std::string where(origin);
  if (!IsValidUtf8(text)) Fail(ErrorCode::kFormat, where + ": invalid UTF-8");
  if (text.empty()) {
    Fail(ErrorCode::kInvalidData, where + ": vocab must be non-empty");
  }
  std::vector<std::string> tokens;
  for (auto line : SplitLines(text)) {
    if (line.empty() && warnings) {
      warnings->push_back(where + ": blank line " +
                          std::to_string(tokens.size() + 1) +
                          " read as empty token at index " +
                          std::to_string(tokens.size()));
    }
    tokens.emplace_back(line);
  }
  return TokenVocab(std::move(tokens));
}

TokenVocab ReadVocab(const std::filesystem::path& path, Warnings* warnings) {
  return ParseVocab(ReadFileBytes(path), path.string(), warnings);
}

std::vector<std::string> ReadLines(const std::filesystem::path& path) {
  return ReadVocab(path).tokens();
}

std::size_t WordGroups::total_words() const {
  std::size_t n = 0;
  for (const auto& g : groups) n += g.words.size();
  return n;
}

void WordGroups::Validate() const {
  if (groups.empty()) Fail(ErrorCode::kInvalidData, "no word groups");
  for (std::size_t i = 0; i < groups.size(); ++i) {
    if (groups[i].words.empty()) {
      Fail(ErrorCode::kInvalidData,
           "word group '" + groups[i].name + "' is empty");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (groups[j].name == groups[i].name) {
        Fail(ErrorCode::kInvalidData,
             "duplicate word group name '" + groups[i].name + "'");
      }
    }
  }
}

WordGroups ParseWordGroups(std::string_view text, std::string_view origin) {
  const std::string where(origin);
  if (!IsValidUtf8(text)) Fail(ErrorCode::kFormat, where + ": invalid UTF-8");
  WordGroups out;
  std::size_t lineno = 0;
  for (auto raw : SplitLines(text)) {
    ++lineno;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    const std::string line = Trim(raw);
    if (line.empty()) continue;
    if (line.front() == '#') {
      out.groups.push_back({Trim(std::string_view(line).substr(1)), {}});
      continue;
    }
    if (out.groups.empty()) {
      Fail(ErrorCode::kFormat, where + ": word at line " +
                                   std::to_string(lineno) +
                                   " precedes the first '# group' header");
    }
    out.groups.back().words.push_back(line);
  }
  out.Validate();
  return out;
}

WordGroups ReadWordGroups(const std::filesystem::path& path) {
  return ParseWordGroups(ReadFileBytes(path), path.string());
}

namespace {

constexpr std::pair<DatasetRole, std::string_view> kRoleNames[] = {
    {DatasetRole::kVocabEmbeddings, "vocab_embeddings"},
    {DatasetRole::kPrototypes, "prototypes"},
    {DatasetRole::kAlignedPatches, "aligned_patches"},
    {DatasetRole::kRawPatches, "raw_patches"},
    {DatasetRole::kAttention, "attention"},
    {DatasetRole::kPromptEmbeddings, "prompt_embeddings"},
};

}  // namespace

std::string_view DatasetRoleName(DatasetRole role) {
  for (const auto& [r, name] : kRoleNames) {
    if (r == role) return name;
  }
  return "unknown";
}

DatasetRole ParseDatasetRole(std::string_view name) {
  for (const auto& [r, n] : kRoleNames) {
    if (n == name) return r;
  }
  Fail(ErrorCode::kInvalidData, "unknown dataset role '" + std::string(name) + "'");
}

std::filesystem::path DescriptorPath(const std::filesystem::path& data_path) {
  return std::filesystem::path(data_path.string() + ".meta.json");
}

void WriteDescriptor(const std::filesystem::path& path,
                     const DatasetDescriptor& d) {
  nlohmann::ordered_json j;
  j["name"] = d.name;
  j["role"] = std::string(DatasetRoleName(d.role));
  j["source"] = d.source;
  WriteFileBytes(path, j.dump(2) + "\n");
}

DatasetDescriptor ReadDescriptor(const std::filesystem::path& path) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(ReadFileBytes(path));
    return DatasetDescriptor{j.at("name").get<std::string>(),
                             ParseDatasetRole(j.at("role").get<std::string>()),
                             j.value("source", std::string())};
  } catch (const nlohmann::json::exception& e) {
    Fail(ErrorCode::kFormat, path.string() + ": " + e.what());
  }
}

}  // namespace tslx
