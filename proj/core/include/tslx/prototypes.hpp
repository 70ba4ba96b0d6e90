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
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tslx/io.hpp"
#include "tslx/matrix.hpp"

namespace tslx {

enum class PrototypeMethod {
  kPca,
  kKmeans,
  kRandom,
  kProvidedText,
  kSimilarityExpansion,
  kLoadedLinear,
};

std::string_view PrototypeMethodName(PrototypeMethod method);

//! K text prototypes in the vocabulary embedding space, with one provenance
//! note per row.
struct PrototypeSet {
  PrototypeMethod method;
  Matrix prototypes;                    // K x D
  std::vector<std::string> provenance;  // size K
  std::vector<double> explained_variance;  // PCA only, descending
  std::vector<std::string> unresolved;     // text methods only

  std::size_t k() const noexcept { return prototypes.rows(); }
  std::size_t dim() const noexcept { return prototypes.cols(); }

  //! Throws unless D matches the vocabulary embedding dimension.
  void CheckDimension(const Matrix& vocab_embeddings) const;
};

//! Top-K unit-norm principal directions of the mean-centred rows, in
//! descending explained variance. Each direction's sign is fixed so that its
//! largest-magnitude component (lowest index on ties) is positive.
PrototypeSet ExtractPca(const Matrix& vocab_embeddings, std::size_t k);

struct KMeansOptions {
  std::uint64_t seed = 0;
  std::size_t max_iter = 100;
  double tol = 1e-6;
};

struct KMeansResult {
  Matrix centroids;
  std::vector<std::size_t> assignment;
  //! Sum of squared distances to the assigned centroid, one entry per
  //! assignment step. Non-increasing.
  std::vector<double> objective;
  std::size_t iterations = 0;
  bool converged = false;
};

//! D^2-weighted seeding from the seeded stream, then Lloyd iterations until
//! the largest centroid shift is below tol or max_iter is reached. An empty
//! cluster is re-seeded at the point farthest from its current centroid.
KMeansResult KMeans(const Matrix& points, std::size_t k,
                    const KMeansOptions& options);

PrototypeSet ExtractKmeans(const Matrix& vocab_embeddings, std::size_t k,
                           const KMeansOptions& options);

//! K distinct rows chosen by a seeded Fisher-Yates prefix.
PrototypeSet ExtractRandom(const Matrix& vocab_embeddings, std::size_t k,
                           std::uint64_t seed);

//! How a word maps onto the vocabulary.
struct WordResolution {
  std::string word;
  std::vector<std::size_t> token_indices;  // one entry for an exact match
  bool exact = false;
};

//! Exact match on the word, then on its "Ġ" / "▁" leading-space variants;
//! otherwise greedy longest-match sub-tokens (the first piece may carry a
//! leading-space marker, later pieces may carry "##"). nullopt when some
//! position cannot be matched.
std::optional<WordResolution> ResolveWord(const TokenVocab& vocab,
                                          std::string_view word);

//! Embedding of a resolved word: its row, or the mean of its pieces' rows.
std::vector<double> WordEmbedding(const WordResolution& resolution,
                                  const Matrix& vocab_embeddings);

//! One prototype per resolvable word; unresolvable words are listed in
//! `unresolved`. Throws when no word resolves.
PrototypeSet ExtractProvided(const TokenVocab& vocab,
                             const Matrix& vocab_embeddings,
                             const std::vector<std::string>& words);

//! Starts from ExtractProvided, then adds, round-robin over the words, each
//! word's next most cosine-similar vocabulary token not already present,
//! until K prototypes are collected.
PrototypeSet ExtractSimilarityExpansion(const TokenVocab& vocab,
                                        const Matrix& vocab_embeddings,
                                        const std::vector<std::string>& words,
                                        std::size_t k);

//! A learned prototype matrix saved as TSLX (K x D).
PrototypeSet LoadLinear(const std::filesystem::path& path);

}  // namespace tslx
