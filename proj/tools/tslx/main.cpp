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
#include <charconv>
#include <cstdlib>
#include <exception>
#include <iostream>
#include <string>
#include <system_error>

#include <CLI11.hpp>

#include "commands.hpp"
#include "tslx/error.hpp"

int main(int argc, char** argv) {
  constexpr int kUsage = 1;
  constexpr int kData = 2;

  tslx::cli::Context ctx;
  ctx.argv.assign(argv, argv + argc);

  CLI::App app{"tslx: time-series / language alignment diagnostics", "tslx"};
  app.set_version_flag("--version", TSLX_VERSION);
  app.require_subcommand(1);
  auto* threads = app.add_option("--threads", ctx.threads,
                                 "Worker threads (default: TSLX_THREADS, else 1)")
                      ->check(CLI::PositiveNumber);
  app.add_option("--manifest", ctx.manifest, "Run manifest output path");
  tslx::cli::RegisterCommands(app, ctx);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  if (threads->count() == 0) {
    if (const char* env = std::getenv("TSLX_THREADS"); env != nullptr && *env != '\0') {
      const std::string text = env;
      std::size_t value = 0;
      const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
      if (ec != std::errc() || end != text.data() + text.size() || value == 0) {
        std::cerr << "tslx: TSLX_THREADS must be a positive integer, got '" << text
                  << "'\n";
        return kUsage;
      }
      ctx.threads = value;
    }
  }

  try {
    ctx.run();
  } catch (const tslx::cli::UsageError& e) {
    std::cerr << "tslx: " << e.what() << "\n";
    return kUsage;
  } catch (const tslx::Error& e) {
    std::cerr << "tslx: error: " << e.what() << "\n";
    return kData;
  } catch (const std::exception& e) {
    std::cerr << "tslx: error: " << e.what() << "\n";
    return kData;
  }
  return EXIT_SUCCESS;
}
