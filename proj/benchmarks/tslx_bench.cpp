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
#include <cstdint>
#include <vector>

#include <benchmark/benchmark.h>

#include "tslx/align.hpp"
#include "tslx/features.hpp"
#include "tslx/matrix.hpp"
#include "tslx/perturb.hpp"
#include "tslx/prototypes.hpp"
#include "tslx/rng.hpp"
#include "tslx/smi.hpp"
#include "tslx/synthesis.hpp"

namespace {

tslx::Matrix RandomMatrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  tslx::Rng rng(seed);
  tslx::Matrix m(rows, cols);
  for (double& v : m.data()) v = rng.Normal(0.0, 1.0);
  return m;
}

std::vector<std::size_t> RoundRobinLabels(std::size_t n, std::size_t k) {
  std::vector<std::size_t> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = i % k;
  return labels;
}

void BM_ExtractFeatures(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const tslx::Matrix patches = RandomMatrix(n, 16, 1);
  for (auto _ : state) benchmark::DoNotOptimize(tslx::ExtractFeatures(patches));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ExtractFeatures)->Arg(1 << 10)->Arg(1 << 14);

void BM_SmiReport(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const tslx::FeatureTable t = tslx::ExtractFeatures(RandomMatrix(n, 16, 2));
  const tslx::Groups groups = tslx::GroupsFromLabels(RoundRobinLabels(n, 32));
  for (auto _ : state) {
    benchmark::DoNotOptimize(tslx::ComputeSmiReport(t, groups, {}, {}));
  }
}
BENCHMARK(BM_SmiReport)->Arg(1 << 10)->Arg(1 << 14);

void BM_Silhouette(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const tslx::Matrix points = RandomMatrix(n, tslx::kFeatureCount, 3);
  const auto labels = RoundRobinLabels(n, 8);
  for (auto _ : state) benchmark::DoNotOptimize(tslx::Silhouette(points, labels));
}
BENCHMARK(BM_Silhouette)->Arg(256)->Arg(2048);

void BM_CosineMatrix(benchmark::State& state) {
  const auto threads = static_cast<std::size_t>(state.range(0));
  const tslx::Matrix a = RandomMatrix(512, 256, 4);
  const tslx::Matrix b = RandomMatrix(4096, 256, 5);
  for (auto _ : state) benchmark::DoNotOptimize(tslx::CosineMatrix(a, b, threads));
  state.SetItemsProcessed(state.iterations() * 512 * 4096);
}
BENCHMARK(BM_CosineMatrix)->Arg(1)->Arg(4)->UseRealTime();

void BM_Pca(benchmark::State& state) {
  const tslx::Matrix emb = RandomMatrix(4096, static_cast<std::size_t>(state.range(0)), 6);
  for (auto _ : state) benchmark::DoNotOptimize(tslx::ExtractPca(emb, 16));
}
BENCHMARK(BM_Pca)->Arg(64)->Arg(256);

void BM_Kmeans(benchmark::State& state) {
  const tslx::Matrix emb = RandomMatrix(4096, 64, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(tslx::ExtractKmeans(emb, 32, {8, 20, 1e-6}));
  }
}
BENCHMARK(BM_Kmeans);

void BM_ReplaceValues(benchmark::State& state) {
  const tslx::Matrix emb = RandomMatrix(4096, 256, 9);
  for (auto _ : state) {
    benchmark::DoNotOptimize(tslx::ReplaceValues(emb, {0.5, 10, {}}));
  }
}
BENCHMARK(BM_ReplaceValues);

void BM_ValidationSweep(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(tslx::ValidationSweep({}));
}
BENCHMARK(BM_ValidationSweep);

}  // namespace

BENCHMARK_MAIN();
