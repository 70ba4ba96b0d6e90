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
#include "manifest.hpp"

#include <openssl/evp.h>

#include <chrono>
#include <cstdio>
#include <ctime>
#include <iostream>
#include <memory>

#include "tslx/error.hpp"
#include "tslx/io.hpp"

namespace tslx::cli {

namespace {

std::string UtcTimestamp() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

std::string Sha256File(const std::filesystem::path& path) {
  const std::string bytes = ReadFileBytes(path);
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(),
                                                              EVP_MD_CTX_free);
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), bytes.data(), bytes.size()) != 1 ||
      EVP_DigestFinal_ex(ctx.get(), digest, &len) != 1) {
    Fail(ErrorCode::kIo, path.string() + ": SHA-256 digest failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += kHex[digest[i] >> 4];
    out += kHex[digest[i] & 15];
  }
  return out;
}

RunManifest::RunManifest(std::string subcommand, std::vector<std::string> argv)
    : subcommand_(std::move(subcommand)), argv_(std::move(argv)) {}

void RunManifest::AddInput(const std::filesystem::path& path) {
  inputs_.emplace_back(path.string(), Sha256File(path));
}

void RunManifest::AddOutput(const std::filesystem::path& path) {
  outputs_.push_back(path.string());
}

void RunManifest::AddSeed(const std::string& name, std::uint64_t seed) {
  seeds_[name] = seed;
}

nlohmann::ordered_json RunManifest::ToJson() const {
  nlohmann::ordered_json j;
  j["tool"] = "tslx";
  j["version"] = TSLX_VERSION;
  j["subcommand"] = subcommand_;
  j["argv"] = argv_;
  j["inputs"] = nlohmann::ordered_json::array();
  for (const auto& [path, digest] : inputs_) {
    j["inputs"].push_back({{"path", path}, {"sha256", digest}});
  }
  j["outputs"] = outputs_;
  j["seeds"] = nlohmann::ordered_json::object();
  for (const auto& [name, seed] : seeds_) j["seeds"][name] = seed;
  j["threads"] = threads_;
  j["timestamp"] = UtcTimestamp();
  if (!result_.is_null()) j["result"] = result_;
  return j;
}

void RunManifest::Emit(
    const std::optional<std::filesystem::path>& explicit_path,
    const std::optional<std::filesystem::path>& primary_output) const {
  const std::string text = ToJson().dump(2) + "\n";
  if (explicit_path) {
    WriteFileBytes(*explicit_path, text);
    return;
  }
  if (primary_output) {
    const auto& out = *primary_output;
    if (std::filesystem::is_directory(out)) {
      WriteFileBytes(out / "run_manifest.json", text);
    } else {
      WriteFileBytes(out.string() + ".manifest.json", text);
    }
    return;
  }
  std::cerr << text;
}

}  // namespace tslx::cli
