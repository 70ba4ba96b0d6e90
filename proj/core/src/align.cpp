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
#include "tslx/align.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "parallel.hpp"
#include "tslx/error.hpp"
#include "tslx/features.hpp"
#include "tslx/prototypes.hpp"

namespace tslx {

namespace {

std::vector<double> RowNorms(const Matrix& m, std::string_view what) {
  std::vector<double> norms(m.rows());
  std::vector<std::size_t> zero;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    double ss = 0.0;
    for (double v : m.row(r)) ss += v * v;
    norms[r] = std::sqrt(ss);
    if (norms[r] == 0.0) zero.push_back(r);
  }
  if (!zero.empty()) {
    std::string list;
    for (std::size_t i = 0; i < zero.size() && i < 20; ++i) {
      if (i) list += ", ";
      list += std::to_string(zero[i]);
    }
    if (zero.size() > 20) list += ", ...";
    Fail(ErrorCode::kInvalidData, std::string(what) + ": " +
                                      std::to_string(zero.size()) +
                                      " zero-norm row(s): " + list);
  }
  return norms;
}

void CheckSameDim(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) {
    Fail(ErrorCode::kInvalidArgument,
         "dimension mismatch: " + std::to_string(a.cols()) + " vs " +
             std::to_string(b.cols()));
  }
}

double Dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t d = 0; d < a.size(); ++d) s += a[d] * b[d];
  return s;
}

void CosineRow(std::span<const double> a, double a_norm, const Matrix& b,
               const std::vector<double>& b_norms, std::span<double> out) {
  for (std::size_t j = 0; j < b.rows(); ++j) {
    out[j] = Dot(a, b.row(j)) / (a_norm * b_norms[j]);
  }
}

}  // namespace

Matrix CosineMatrix(const Matrix& a, const Matrix& b, std::size_t threads) {
  CheckSameDim(a, b);
  const auto a_norms = RowNorms(a, "cosine lhs");
  const auto b_norms = RowNorms(b, "cosine rhs");
  Matrix out(a.rows(), b.rows());
  detail::ParallelFor(a.rows(), threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      CosineRow(a.row(i), a_norms[i], b, b_norms, out.row(i));
    }
  });
  return out;
}

std::vector<std::size_t> TopKRow(std::span<const double> scores,
                                 std::size_t k) {
  if (k > scores.size()) {
    Fail(ErrorCode::kInvalidArgument,
         "k=" + std::to_string(k) + " exceeds " +
             std::to_string(scores.size()) + " candidates");
  }
  std::vector<std::size_t> idx(scores.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  const auto before = [&](std::size_t x, std::size_t y) {
    if (scores[x] != scores[y]) return scores[x] > scores[y];
    return x < y;
  };
  std::partial_sort(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(k),
                    idx.end(), before);
  idx.resize(k);
  return idx;
}

namespace {

std::vector<std::vector<std::size_t>> RankTokens(const Matrix& embeddings,
                                                 const Matrix& vocab_embeddings,
                                                 std::size_t k,
                                                 std::size_t threads) {
  CheckSameDim(embeddings, vocab_embeddings);
  if (k < 1 || k > vocab_embeddings.rows()) {
    Fail(ErrorCode::kInvalidArgument,
         "k=" + std::to_string(k) + " outside [1, " +
             std::to_string(vocab_embeddings.rows()) + "]");
  }
  const auto e_norms = RowNorms(embeddings, "embeddings");
  const auto v_norms = RowNorms(vocab_embeddings, "vocabulary embeddings");
  std::vector<std::vector<std::size_t>> out(embeddings.rows());
  detail::ParallelFor(
      embeddings.rows(), threads, [&](std::size_t begin, std::size_t end) {
        std::vector<double> sims(vocab_embeddings.rows());
        for (std::size_t i = begin; i < end; ++i) {
          CosineRow(embeddings.row(i), e_norms[i], vocab_embeddings, v_norms,
                    sims);
          out[i] = TopKRow(sims, k);
        }
      });
  return out;
}

}  // namespace

std::vector<std::vector<TokenMatch>> NearestTokens(const Matrix& embeddings,
                                                   const Matrix& vocab_embeddings,
                                                   const TokenVocab& vocab,
                                                   std::size_t k,
                                                   std::size_t threads) {
  vocab.CheckPairing(vocab_embeddings);
  const auto rankings = RankTokens(embeddings, vocab_embeddings, k, threads);
  const auto e_norms = RowNorms(embeddings, "embeddings");
  const auto v_norms = RowNorms(vocab_embeddings, "vocabulary embeddings");
  std::vector<std::vector<TokenMatch>> out(embeddings.rows());
  for (std::size_t i = 0; i < embeddings.rows(); ++i) {
    for (std::size_t idx : rankings[i]) {
      const double sim = Dot(embeddings.row(i), vocab_embeddings.row(idx)) /
                         (e_norms[i] * v_norms[idx]);
      out[i].push_back(TokenMatch{idx, vocab[idx], sim});
    }
  }
  return out;
}

SelectedWordsSimilarity ComputeSelectedWordsSimilarity(
    const Matrix& embeddings, const TokenVocab& vocab,
    const Matrix& vocab_embeddings, const WordGroups& groups) {
  groups.Validate();
  vocab.CheckPairing(vocab_embeddings);
  CheckSameDim(embeddings, vocab_embeddings);

  SelectedWordsSimilarity out{Matrix(1, 1), {}, {}, {}, Matrix(1, 1), {}, 0.0,
                              {}};
  std::vector<double> word_data;
  for (std::size_t g = 0; g < groups.groups.size(); ++g) {
    const auto& group = groups.groups[g];
    out.group_names.push_back(group.name);
    std::size_t resolved_in_group = 0;
    for (const auto& w : group.words) {
      auto r = ResolveWord(vocab, w);
      if (!r) {
        out.unresolved.push_back(w);
        continue;
      }
      const auto emb = WordEmbedding(*r, vocab_embeddings);
      word_data.insert(word_data.end(), emb.begin(), emb.end());
      out.columns.push_back(w);
      out.column_group.push_back(g);
      ++resolved_in_group;
    }
    if (resolved_in_group == 0) {
      Fail(ErrorCode::kInvalidData,
           "word group '" + group.name + "' has no resolvable word");
    }
  }
  const Matrix words(out.columns.size(), vocab_embeddings.cols(),
                     std::move(word_data));
  out.heatmap = CosineMatrix(embeddings, words);

  const std::size_t n_groups = groups.groups.size();
  out.group_means = Matrix(embeddings.rows(), n_groups);
  std::vector<std::size_t> group_size(n_groups, 0);
  for (std::size_t g : out.column_group) ++group_size[g];
  for (std::size_t r = 0; r < embeddings.rows(); ++r) {
    for (std::size_t c = 0; c < out.columns.size(); ++c) {
      out.group_means(r, out.column_group[c]) += out.heatmap(r, c);
    }
    for (std::size_t g = 0; g < n_groups; ++g) {
      out.group_means(r, g) /= static_cast<double>(group_size[g]);
    }
  }
  if (n_groups >= 2) {
    double total = 0.0;
    for (std::size_t r = 0; r < embeddings.rows(); ++r) {
      const double d = out.group_means(r, 0) - out.group_means(r, 1);
      out.difference.push_back(d);
      total += d;
    }
    out.mean_difference = total / static_cast<double>(embeddings.rows());
  }
  return out;
}

TokenSetGrouping GroupByRankPrefix(
    const std::vector<std::vector<std::size_t>>& rankings, std::size_t k) {
  if (k < 1) Fail(ErrorCode::kInvalidArgument, "token-set length k must be >= 1");
  TokenSetGrouping out;
  out.k = k;
  std::map<std::vector<std::size_t>, std::size_t> slot;
  for (std::size_t p = 0; p < rankings.size(); ++p) {
    if (rankings[p].size() < k) {
      Fail(ErrorCode::kInvalidArgument,
           "ranking of row " + std::to_string(p) + " has " +
               std::to_string(rankings[p].size()) + " < k entries");
    }
    std::vector<std::size_t> key(rankings[p].begin(),
                                 rankings[p].begin() + static_cast<std::ptrdiff_t>(k));
    auto [it, inserted] = slot.try_emplace(key, out.keys.size());
    if (inserted) {
      out.keys.push_back(std::move(key));
      out.members.emplace_back();
    }
    out.members[it->second].push_back(p);
  }
  return out;
}

TokenSetGrouping GroupByTokenSets(const Matrix& aligned_embeddings,
                                  const Matrix& vocab_embeddings,
                                  const TokenVocab& vocab, std::size_t k,
                                  std::size_t threads) {
  vocab.CheckPairing(vocab_embeddings);
  return GroupByRankPrefix(
      RankTokens(aligned_embeddings, vocab_embeddings, k, threads), k);
}

std::vector<std::string> KeyTokens(const std::vector<std::size_t>& key,
                                   const TokenVocab& vocab) {
  std::vector<std::string> out;
  out.reserve(key.size());
  for (std::size_t idx : key) out.push_back(vocab[idx]);
  return out;
}

SmiSweep SmiVsKSweep(const Matrix& aligned_embeddings,
                     const Matrix& vocab_embeddings, const TokenVocab& vocab,
                     const Matrix& raw_patches, std::size_t k_max,
                     const SmiConfig& cfg, std::size_t threads) {
  cfg.Validate();
  vocab.CheckPairing(vocab_embeddings);
  if (raw_patches.rows() != aligned_embeddings.rows()) {
    Fail(ErrorCode::kInvalidArgument,
         "raw patches have " + std::to_string(raw_patches.rows()) +
             " rows but aligned embeddings have " +
             std::to_string(aligned_embeddings.rows()));
  }
  const FeatureTable features = ExtractFeatures(raw_patches);
  const auto rankings =
      RankTokens(aligned_embeddings, vocab_embeddings, k_max, threads);

  SmiSweep out;
  for (std::size_t k = 1; k <= k_max; ++k) {
    const TokenSetGrouping grouping = GroupByRankPrefix(rankings, k);
    const double d_intra = DIntra(features.values, grouping.members);
    const double d_inter = DInter(features.values, grouping.members);
    const double smi = Smi(d_intra, d_inter, cfg);
    out.rows.push_back(
        SmiSweepRow{k, grouping.members.size(), d_intra, d_inter, smi});
    if (smi == 1.0 && !out.first_k_at_one) out.first_k_at_one = k;
  }
  return out;
}

}  // namespace tslx
