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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tslx/io.hpp"
#include "tslx/matrix.hpp"
#include "tslx/smi.hpp"

namespace tslx {

//! Entry (i, j) = a_i . b_j / (|a_i| |b_j|). Rows are split across
//! `threads` workers; every entry is computed the same way regardless.
//! Throws on a dimension mismatch or any zero-norm row (listing them).
Matrix CosineMatrix(const Matrix& a, const Matrix& b, std::size_t threads = 1);

//! Indices of the k largest scores: descending, ties by ascending index.
std::vector<std::size_t> TopKRow(std::span<const double> scores,
                                 std::size_t k);

struct TokenMatch {
  std::size_t index;
  std::string token;
  double similarity;
};

//! Per embedding row, the k most cosine-similar vocabulary tokens.
std::vector<std::vector<TokenMatch>> NearestTokens(const Matrix& embeddings,
                                                   const Matrix& vocab_embeddings,
                                                   const TokenVocab& vocab,
                                                   std::size_t k,
                                                   std::size_t threads = 1);

struct SelectedWordsSimilarity {
  Matrix heatmap;                     // rows = embeddings, cols = words
  std::vector<std::string> columns;   // resolved words, in group order
  std::vector<std::size_t> column_group;
  std::vector<std::string> group_names;
  Matrix group_means;                 // rows = embeddings, cols = groups
  //! Per row: mean over group 0 minus mean over group 1 (related minus
  //! unrelated for the bundled lists). Empty with fewer than two groups.
  std::vector<double> difference;
  double mean_difference = 0.0;
  std::vector<std::string> unresolved;
};

//! Cosine similarity of every embedding row against every word of every
//! group, words resolved with the provided-text rules. Unresolvable words
//! are dropped from the heatmap and listed; a group left empty is an error.
SelectedWordsSimilarity ComputeSelectedWordsSimilarity(
    const Matrix& embeddings, const TokenVocab& vocab,
    const Matrix& vocab_embeddings, const WordGroups& groups);

//! Patches keyed by their ordered top-k token tuple.
struct TokenSetGrouping {
  std::size_t k = 0;
  std::vector<std::vector<std::size_t>> keys;  // token-index tuples
  Groups members;                              // patch indices per key
};

//! Groups rows by the length-k prefix of precomputed rankings. Groups are
//! ordered by their first member.
TokenSetGrouping GroupByRankPrefix(
    const std::vector<std::vector<std::size_t>>& rankings, std::size_t k);

TokenSetGrouping GroupByTokenSets(const Matrix& aligned_embeddings,
                                  const Matrix& vocab_embeddings,
                                  const TokenVocab& vocab, std::size_t k,
                                  std::size_t threads = 1);

//! Key rendered as its tokens, e.g. ["Ġbeetle", "ĠModule"].
std::vector<std::string> KeyTokens(const std::vector<std::size_t>& key,
                                   const TokenVocab& vocab);

struct SmiSweepRow {
  std::size_t k;
  std::size_t n_groups;
  double d_intra;
  double d_inter;
  double smi;
};

struct SmiSweep {
  std::vector<SmiSweepRow> rows;
  std::optional<std::size_t> first_k_at_one;
};

//! For k = 1..k_max: group aligned rows by token set, score the raw patches'
//! features with SMI. Rankings and features are computed once.
SmiSweep SmiVsKSweep(const Matrix& aligned_embeddings,
                     const Matrix& vocab_embeddings, const TokenVocab& vocab,
                     const Matrix& raw_patches, std::size_t k_max,
                     const SmiConfig& cfg = {}, std::size_t threads = 1);

}  // namespace tslx
