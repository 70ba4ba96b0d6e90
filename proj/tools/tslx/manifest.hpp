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

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace tslx::cli {

//! Record of one invocation, written for every successful run.
class RunManifest {
 public:
  RunManifest(std::string subcommand, std::vector<std::string> argv);

  void AddInput(const std::filesystem::path& path);
  void AddOutput(const std::filesystem::path& path);
  void AddSeed(const std::string& name, std::uint64_t seed);
  void SetThreads(std::size_t threads) { threads_ = threads; }
  void SetResult(nlohmann::ordered_json result) { result_ = std::move(result); }

  nlohmann::ordered_json ToJson() const;

  //! Writes to `explicit_path` if set, else next to the primary output,
  //! else to stderr.
  void Emit(const std::optional<std::filesystem::path>& explicit_path,
            const std::optional<std::filesystem::path>& primary_output) const;

 private:
  std::string subcommand_;
  std::vector<std::string> argv_;
  std::vector<std::pair<std::string, std::string>> inputs_;  // path, sha256
  std::vector<std::string> outputs_;
  std::map<std::string, std::uint64_t> seeds_;
  std::size_t threads_ = 1;
  nlohmann::ordered_json result_;
};

std::string Sha256File(const std::filesystem::path& path);

}  // namespace tslx::cli
