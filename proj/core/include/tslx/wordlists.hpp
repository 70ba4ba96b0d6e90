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

#include <span>
#include <string_view>

#include "tslx/io.hpp"

namespace tslx {

inline constexpr std::string_view kWordListVersion = "1";

struct WordCategory {
  std::string_view group;  // "related" or "unrelated"
  std::string_view name;
  std::span<const std::string_view> words;
};

//! 80 time-series-related words in five categories followed by 80 unrelated
//! words in seven categories. "from" and "to" occur in both lists.
std::span<const WordCategory> BundledCategories();

//! Groups "related" then "unrelated", words in category order.
WordGroups LoadBundledWordGroups();

}  // namespace tslx
