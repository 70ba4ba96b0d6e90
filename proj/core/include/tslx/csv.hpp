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
#include <string>
#include <string_view>
#include <vector>

namespace tslx {

struct CsvRecord {
  std::size_t line;  // 1-based line where the record starts
  std::vector<std::string> fields;
};

//! RFC-4180 records; accepts "\n" and "\r\n" terminators and quoted fields
//! with "" escapes. Blank lines are skipped.
std::vector<CsvRecord> ParseCsvRecords(std::string_view text,
                                       std::string_view origin);

//! Quotes a field only when it contains a separator, quote, or line break.
std::string QuoteCsvField(std::string_view field);
//! Joined, quoted fields followed by "\n".
std::string FormatCsvRecord(const std::vector<std::string>& fields);

}  // namespace tslx
