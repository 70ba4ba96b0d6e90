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
#include "tslx/csv.hpp"

#include "tslx/error.hpp"

namespace tslx {

std::vector<CsvRecord> ParseCsvRecords(std::string_view text,
                                       std::string_view origin) {
  std::vector<CsvRecord> records;
  std::size_t line = 1;
  std::size_t i = 0;
  const std::size_t n = text.size();

  while (i < n) {
    CsvRecord rec{line, {}};
    std::string field;
    bool any_content = false;
    bool done = false;
    while (!done) {
      if (i < n && text[i] == '"') {
        any_content = true;
        ++i;
        const std::size_t quote_line = line;
        while (true) {
          if (i >= n) {
            Fail(ErrorCode::kFormat, std::string(origin) +
                                         ": unterminated quoted field "
                                         "starting at line " +
                                         std::to_string(quote_line));
          }
          const char c = text[i++];
          if (c == '"') {
            if (i < n && text[i] == '"') {
              field += '"';
              ++i;
            } else {
              break;
            }
          } else {
            if (c == '\n') ++line;
            field += c;
          }
        }
      }
      while (i < n && text[i] != ',' && text[i] != '\n' &&
             !(text[i] == '\r' && i + 1 < n && text[i + 1] == '\n') &&
             !(text[i] == '\r' && i + 1 == n)) {
        any_content = true;
        field += text[i++];
      }
      rec.fields.push_back(std::move(field));
      field.clear();
      if (i < n && text[i] == ',') {
        any_content = true;
        ++i;
        continue;
      }
      if (i < n && text[i] == '\r') ++i;
      if (i < n && text[i] == '\n') ++i;
      ++line;
      done = true;
    }
    if (any_content) records.push_back(std::move(rec));
  }
  return records;
}

std::string QuoteCsvField(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) {
    return std::string(field);
  }
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string FormatCsvRecord(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += QuoteCsvField(fields[i]);
  }
  out += '\n';
  return out;
}

}  // namespace tslx
