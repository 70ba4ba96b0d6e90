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
#include "tslx/wordlists.hpp"

#include <array>
#include <string>

namespace tslx {

namespace {

constexpr std::string_view kCharacteristics[] = {
    "autocorrelation", "seasonality", "stationarity", "lag",        "decomposition",
    "anomaly",         "cycle",       "variance",     "covariance", "frequency"};
constexpr std::string_view kChanges[] = {
    "increase", "decrease", "grow",        "decline", "rise",
    "fall",     "accumulate", "contraction", "up",    "down"};
constexpr std::string_view kDegreeOfChanges[] = {"rapid", "steady", "abrupt",
                                                 "gradual", "slow"};
constexpr std::string_view kNumber[] = {
    "1",    "one",   "2",   "two",      "3",        "three",  "4",
    "four", "5",     "five", "6",       "six",      "7",      "seven",
    "8",    "eight", "9",   "nine",     "0",        "zero",   "ten",
    "hundred", "thousand", "million", "billion"};
constexpr std::string_view kOthers[] = {
    "trend",     "exponential", "smoothing", "regression", "prediction",
    "forecast",  "pattern",     "measure",   "analysis",   "signal",
    "time",      "sequence",    "interval",  "noise",      "metrics",
    "statistics", "quantify",   "variable",  "process",    "observation",
    "algorithm", "feature",     "dataset",   "parameter",  "function",
    "series",    "temporal",    "step",      "from",       "to"};

constexpr std::string_view kPronouns[] = {
    "I",  "you", "he",  "she",   "it",    "we",  "they", "me",
    "him", "her", "Those", "These", "His", "Yours", "Hers"};
constexpr std::string_view kPrepositions[] = {"of", "in", "for",  "on",    "at",
                                              "with", "by", "from", "about", "to"};
constexpr std::string_view kCities[] = {"London", "Beijing",    "Tokyo",  "Sydney",
                                        "Paris",  "Seoul",      "Washington",
                                        "Berlin", "Singapore",  "Rome"};
constexpr std::string_view kCompanies[] = {"Apple", "Google", "Amazon",
                                           "Microsoft", "Meta"};
constexpr std::string_view kCommonNames[] = {"John",    "Mary",    "David", "Sarah",
                                             "Michael", "Jessica", "James", "Emma",
                                             "Robert",  "Olivia"};
constexpr std::string_view kCommonNouns[] = {
    "book", "phone", "city", "child", "game",   "weather",  "news", "people",
    "person", "house", "car", "school", "dog",  "cat",      "tree", "river",
    "mountain", "sun", "food", "water"};
constexpr std::string_view kCommonAdjectives[] = {"good", "new",    "first", "last",
                                                  "long", "great",  "little", "odd",
                                                  "big",  "angry"};

constexpr std::array<WordCategory, 12> kCategories = {{
    {"related", "Characteristics", kCharacteristics},
    {"related", "Changes", kChanges},
    {"related", "Degree of changes", kDegreeOfChanges},
    {"related", "Number", kNumber},
    {"related", "Others", kOthers},
    {"unrelated", "Pronouns", kPronouns},
    {"unrelated", "Prepositions", kPrepositions},
    {"unrelated", "Cities", kCities},
    {"unrelated", "Companies", kCompanies},
    {"unrelated", "Common Names", kCommonNames},
    {"unrelated", "Common Nouns", kCommonNouns},
    {"unrelated", "Common Adjectives", kCommonAdjectives},
}};

}  // namespace

std::span<const WordCategory> BundledCategories() { return kCategories; }

WordGroups LoadBundledWordGroups() {
  WordGroups out;
  for (const auto& cat : kCategories) {
    if (out.groups.empty() || out.groups.back().name != cat.group) {
      out.groups.push_back({std::string(cat.group), {}});
    }
    for (auto w : cat.words) out.groups.back().words.emplace_back(w);
  }
  return out;
}

}  // namespace tslx
