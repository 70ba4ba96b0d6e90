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
#include "tslx/perturb.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "tslx/error.hpp"
#include "tslx/rng.hpp"
#include "tslx/stats.hpp"

namespace tslx {

std::string_view PerturbModeName(PerturbMode mode) {
  return mode == PerturbMode::kGaussianFit ? "gaussian_fit" : "uniform_range";
}

PerturbMode ParsePerturbMode(std::string_view name) {
  if (name == "gaussian" || name == "gaussian_fit") return PerturbMode::kGaussianFit;
  if (name == "uniform" || name == "uniform_range") return PerturbMode::kUniformRange;
  Fail(ErrorCode::kInvalidArgument,
       "unknown perturb mode '" + std::string(name) + "'");
}

void PerturbConfig::Validate() const {
  if (!(ratio >= 0.0 && ratio <= 1.0)) {
    Fail(ErrorCode::kInvalidArgument,
         "perturb ratio " + std::to_string(ratio) + " outside [0, 1]");
  }
}

std::size_t ReplacementCount(double ratio, std::size_t n) {
  return static_cast<std::size_t>(std::llround(ratio * static_cast<double>(n)));
}

PerturbResult ReplaceValues(const Matrix& embeddings, const PerturbConfig& cfg) {
  cfg.Validate();
  const auto src = embeddings.data();
  const std::size_t n = src.size();

  PerturbResult out{embeddings, ReplacementCount(cfg.ratio, n), {}, 0.0, 0.0,
                    0.0,        0.0, cfg.mode, {}};
  const MeanStd ms = PopulationMeanStd(src);
  out.fit_mean = ms.mean;
  out.fit_std = ms.std;
  const auto [lo, hi] = std::minmax_element(src.begin(), src.end());
  out.min = *lo;
  out.max = *hi;
  if (cfg.mode == PerturbMode::kGaussianFit && out.fit_std == 0.0) {
    out.effective_mode = PerturbMode::kUniformRange;
    out.warnings.push_back(
        "fitted std is 0; falling back to uniform over [min, max]");
  }

  Rng rng(cfg.seed);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  for (std::size_t i = 0; i < out.changed_count; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.UniformIndex(n - i));
    std::swap(order[i], order[j]);
  }
  out.positions.assign(order.begin(),
                       order.begin() + static_cast<std::ptrdiff_t>(out.changed_count));

  auto dst = out.perturbed.data();
  for (std::size_t pos : out.positions) {
    dst[pos] = out.effective_mode == PerturbMode::kGaussianFit
                   ? rng.Normal(out.fit_mean, out.fit_std)
                   : rng.Uniform(out.min, out.max);
  }
  return out;
}

}  // namespace tslx
