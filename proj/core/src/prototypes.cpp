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
#include "tslx/prototypes.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <unordered_set>

#include "tslx/align.hpp"
#include "tslx/error.hpp"
#include "tslx/rng.hpp"

namespace tslx {

std::string_view PrototypeMethodName(PrototypeMethod method) {
  switch (method) {
    case PrototypeMethod::kPca:
      return "pca";
    case PrototypeMethod::kKmeans:
      return "kmeans";
    case PrototypeMethod::kRandom:
      return "random";
    case PrototypeMethod::kProvidedText:
      return "provided_text";
    case PrototypeMethod::kSimilarityExpansion:
      return "similarity_expansion";
    case PrototypeMethod::kLoadedLinear:
      return "loaded_linear";
  }
  return "unknown";
}

void PrototypeSet::CheckDimension(const Matrix& vocab_embeddings) const {
  if (dim() != vocab_embeddings.cols()) {
    Fail(ErrorCode::kInvalidData,
         "prototype dimension " + std::to_string(dim()) +
             " != vocabulary embedding dimension " +
             std::to_string(vocab_embeddings.cols()));
  }
}

namespace {

double SquaredDistance(std::span<const double> a, std::span<const double> b) {
  double ss = 0.0;
  for (std::size_t d = 0; d < a.size(); ++d) {
    const double diff = a[d] - b[d];
    ss += diff * diff;
  }
  return ss;
}

void CheckK(std::size_t k, std::size_t limit, std::string_view what) {
  if (k < 1 || k > limit) {
    Fail(ErrorCode::kInvalidArgument,
         std::string(what) + ": K=" + std::to_string(k) +
             " outside [1, " + std::to_string(limit) + "]");
  }
}

}  // namespace

PrototypeSet ExtractPca(const Matrix& vocab_embeddings, std::size_t k) {
  const std::size_t n = vocab_embeddings.rows();
  const std::size_t dim = vocab_embeddings.cols();
  CheckK(k, std::min(n, dim), "pca");

  using RowMajor =
      Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  Eigen::Map<const RowMajor> x(vocab_embeddings.data().data(),
                               static_cast<Eigen::Index>(n),
                               static_cast<Eigen::Index>(dim));
  const Eigen::RowVectorXd mean = x.colwise().mean();
  const Eigen::MatrixXd centred = x.rowwise() - mean;
  const Eigen::MatrixXd cov =
      (centred.transpose() * centred) / static_cast<double>(n);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(cov);
  if (solver.info() != Eigen::Success) {
    Fail(ErrorCode::kInvalidData, "pca: covariance eigen-decomposition failed");
  }
  const Eigen::VectorXd& values = solver.eigenvalues();  // ascending
  const Eigen::MatrixXd& vectors = solver.eigenvectors();
  const double largest = std::max(values(values.size() - 1), 0.0);
  const double cutoff =
      largest * static_cast<double>(dim) * std::numeric_limits<double>::epsilon() * 16;
  std::size_t rank = 0;
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    if (values(i) > cutoff) ++rank;
  }
  if (rank < k) {
    Fail(ErrorCode::kInvalidData,
         "pca: centred data has rank " + std::to_string(rank) +
             ", below K=" + std::to_string(k) +
             " (achievable rank: " + std::to_string(rank) + ")");
  }

  Matrix protos(k, dim);
  PrototypeSet out{PrototypeMethod::kPca, Matrix(k, dim), {}, {}, {}};
  for (std::size_t c = 0; c < k; ++c) {
    const Eigen::Index src = values.size() - 1 - static_cast<Eigen::Index>(c);
    Eigen::VectorXd v = vectors.col(src);
    v.normalize();
    Eigen::Index pivot = 0;
    for (Eigen::Index d = 1; d < v.size(); ++d) {
      if (std::abs(v(d)) > std::abs(v(pivot))) pivot = d;
    }
    if (v(pivot) < 0) v = -v;
    auto row = protos.row(c);
    for (std::size_t d = 0; d < dim; ++d) {
      row[d] = v(static_cast<Eigen::Index>(d));
    }
    out.explained_variance.push_back(values(src));
    out.provenance.push_back("principal component " + std::to_string(c));
  }
  out.prototypes = std::move(protos);
  return out;
}

KMeansResult KMeans(const Matrix& points, std::size_t k,
                    const KMeansOptions& options) {
  const std::size_t n = points.rows();
  const std::size_t dim = points.cols();
  CheckK(k, n, "kmeans");
  Rng rng(options.seed);

  // D^2-weighted seeding.
  std::vector<std::size_t> chosen;
  std::vector<bool> is_chosen(n, false);
  std::vector<double> d2(n, std::numeric_limits<double>::infinity());
  auto choose = [&](std::size_t idx) {
    chosen.push_back(idx);
    is_chosen[idx] = true;
    for (std::size_t i = 0; i < n; ++i) {
      d2[i] = std::min(d2[i], SquaredDistance(points.row(i), points.row(idx)));
    }
  };
  choose(static_cast<std::size_t>(rng.UniformIndex(n)));
  while (chosen.size() < k) {
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) total += d2[i];
    if (total > 0.0) {
      const double target = rng.Uniform01() * total;
      double acc = 0.0;
      std::size_t pick = n;
      for (std::size_t i = 0; i < n; ++i) {
        if (d2[i] <= 0.0) continue;
        acc += d2[i];
        pick = i;
        if (acc > target) break;
      }
      choose(pick);
    } else {
      // Remaining points duplicate chosen centres: take the first unchosen.
      std::size_t pick = 0;
      while (is_chosen[pick]) ++pick;
      choose(pick);
    }
  }

  KMeansResult result{points.SelectRows(chosen), std::vector<std::size_t>(n, 0),
                      {}, 0, false};
  Matrix& centroids = result.centroids;
  std::vector<double> dist(n);
  for (std::size_t iter = 0; iter < options.max_iter; ++iter) {
    double objective = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t best = 0;
      double best_d = SquaredDistance(points.row(i), centroids.row(0));
      for (std::size_t c = 1; c < k; ++c) {
        const double d = SquaredDistance(points.row(i), centroids.row(c));
        if (d < best_d) {
          best_d = d;
          best = c;
        }
      }
      result.assignment[i] = best;
      dist[i] = best_d;
      objective += best_d;
    }
    result.objective.push_back(objective);

    Matrix updated(k, dim);
    std::vector<std::size_t> counts(k, 0);
    for (std::size_t i = 0; i < n; ++i) {
      auto dst = updated.row(result.assignment[i]);
      const auto src = points.row(i);
      for (std::size_t d = 0; d < dim; ++d) dst[d] += src[d];
      ++counts[result.assignment[i]];
    }
    for (std::size_t c = 0; c < k; ++c) {
      auto row = updated.row(c);
      if (counts[c] == 0) {
        std::size_t far = 0;
        for (std::size_t i = 1; i < n; ++i) {
          if (dist[i] > dist[far]) far = i;
        }
        const auto src = points.row(far);
        std::copy(src.begin(), src.end(), row.begin());
        dist[far] = 0.0;
        continue;
      }
      for (double& v : row) v /= static_cast<double>(counts[c]);
    }

    double max_shift = 0.0;
    for (std::size_t c = 0; c < k; ++c) {
      max_shift = std::max(
          max_shift, std::sqrt(SquaredDistance(updated.row(c), centroids.row(c))));
    }
    centroids = std::move(updated);
    result.iterations = iter + 1;
    if (max_shift < options.tol) {
      result.converged = true;
      break;
    }
  }
  return result;
}

PrototypeSet ExtractKmeans(const Matrix& vocab_embeddings, std::size_t k,
                           const KMeansOptions& options) {
  KMeansResult km = KMeans(vocab_embeddings, k, options);
  std::vector<std::size_t> sizes(k, 0);
  for (std::size_t a : km.assignment) ++sizes[a];
  PrototypeSet out{PrototypeMethod::kKmeans, std::move(km.centroids), {}, {}, {}};
  for (std::size_t c = 0; c < k; ++c) {
    out.provenance.push_back("centroid " + std::to_string(c) + " of " +
                             std::to_string(sizes[c]) + " tokens");
  }
  return out;
}

PrototypeSet ExtractRandom(const Matrix& vocab_embeddings, std::size_t k,
                           std::uint64_t seed) {
  const std::size_t n = vocab_embeddings.rows();
  CheckK(k, n, "random");
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  Rng rng(seed);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.UniformIndex(n - i));
    std::swap(order[i], order[j]);
  }
  order.resize(k);
  PrototypeSet out{PrototypeMethod::kRandom, vocab_embeddings.SelectRows(order),
                   {}, {}, {}};
  for (std::size_t idx : order) {
    out.provenance.push_back("row " + std::to_string(idx));
  }
  return out;
}

namespace {

constexpr std::string_view kSpaceMarkers[] = {"\xC4\xA0", "\xE2\x96\x81"};  // Ġ ▁
constexpr std::string_view kContinuationMarker = "##";

std::optional<std::size_t> FindPiece(const TokenVocab& vocab,
                                     std::string_view piece, bool first) {
  if (first) {
    for (auto marker : kSpaceMarkers) {
      if (auto idx = vocab.Find(std::string(marker) + std::string(piece))) {
        return idx;
      }
    }
    return vocab.Find(piece);
  }
  if (auto idx = vocab.Find(piece)) return idx;
  return vocab.Find(std::string(kContinuationMarker) + std::string(piece));
}

std::string DescribeResolution(const WordResolution& r,
                               const TokenVocab& vocab) {
  std::string out = "word '" + r.word + "' -> ";
  for (std::size_t i = 0; i < r.token_indices.size(); ++i) {
    if (i) out += " + ";
    out += "'" + vocab[r.token_indices[i]] + "'#" +
           std::to_string(r.token_indices[i]);
  }
  if (!r.exact) out += " (mean of sub-tokens)";
  return out;
}

}  // namespace

std::optional<WordResolution> ResolveWord(const TokenVocab& vocab,
                                          std::string_view word) {
  if (word.empty()) return std::nullopt;
  if (auto idx = vocab.Find(word)) {
    return WordResolution{std::string(word), {*idx}, true};
  }
  for (auto marker : kSpaceMarkers) {
    if (auto idx = vocab.Find(std::string(marker) + std::string(word))) {
      return WordResolution{std::string(word), {*idx}, true};
    }
  }
  WordResolution r{std::string(word), {}, false};
  std::size_t pos = 0;
  while (pos < word.size()) {
    std::optional<std::size_t> match;
    std::size_t len = word.size() - pos;
    for (; len > 0; --len) {
      match = FindPiece(vocab, word.substr(pos, len), pos == 0);
      if (match) break;
    }
    if (!match) return std::nullopt;
    r.token_indices.push_back(*match);
    pos += len;
  }
  return r;
}

std::vector<double> WordEmbedding(const WordResolution& resolution,
                                  const Matrix& vocab_embeddings) {
  std::vector<double> out(vocab_embeddings.cols(), 0.0);
  for (std::size_t idx : resolution.token_indices) {
    const auto row = vocab_embeddings.row(idx);
    for (std::size_t d = 0; d < out.size(); ++d) out[d] += row[d];
  }
  const double count = static_cast<double>(resolution.token_indices.size());
  if (resolution.token_indices.size() > 1) {
    for (double& v : out) v /= count;
  }
  return out;
}

namespace {

struct ResolvedWords {
  std::vector<WordResolution> resolved;
  std::vector<std::string> unresolved;
};

ResolvedWords ResolveAll(const TokenVocab& vocab,
                         const Matrix& vocab_embeddings,
                         const std::vector<std::string>& words) {
  vocab.CheckPairing(vocab_embeddings);
  if (words.empty()) Fail(ErrorCode::kInvalidArgument, "word list is empty");
  ResolvedWords out;
  for (const auto& w : words) {
    if (auto r = ResolveWord(vocab, w)) {
      out.resolved.push_back(std::move(*r));
    } else {
      out.unresolved.push_back(w);
    }
  }
  if (out.resolved.empty()) {
    Fail(ErrorCode::kInvalidData,
         "none of the " + std::to_string(words.size()) +
             " words resolves against the vocabulary");
  }
  return out;
}

}  // namespace

PrototypeSet ExtractProvided(const TokenVocab& vocab,
                             const Matrix& vocab_embeddings,
                             const std::vector<std::string>& words) {
  ResolvedWords rw = ResolveAll(vocab, vocab_embeddings, words);
  std::vector<double> data;
  data.reserve(rw.resolved.size() * vocab_embeddings.cols());
  PrototypeSet out{PrototypeMethod::kProvidedText, Matrix(1, 1), {}, {},
                   std::move(rw.unresolved)};
  for (const auto& r : rw.resolved) {
    const auto emb = WordEmbedding(r, vocab_embeddings);
    data.insert(data.end(), emb.begin(), emb.end());
    out.provenance.push_back(DescribeResolution(r, vocab));
  }
  out.prototypes = Matrix(rw.resolved.size(), vocab_embeddings.cols(),
                          std::move(data));
  return out;
}

PrototypeSet ExtractSimilarityExpansion(const TokenVocab& vocab,
                                        const Matrix& vocab_embeddings,
                                        const std::vector<std::string>& words,
                                        std::size_t k) {
  PrototypeSet seed = ExtractProvided(vocab, vocab_embeddings, words);
  if (k < seed.k()) {
    Fail(ErrorCode::kInvalidArgument,
         "simexp: K=" + std::to_string(k) + " is smaller than the " +
             std::to_string(seed.k()) + " resolvable words");
  }
  if (k == seed.k()) {
    seed.method = PrototypeMethod::kSimilarityExpansion;
    return seed;
  }

  // Exact single-token words already occupy their vocabulary rows.
  std::unordered_set<std::size_t> used;
  std::vector<WordResolution> resolved;
  for (const auto& w : words) {
    if (auto r = ResolveWord(vocab, w)) {
      if (r->exact) used.insert(r->token_indices.front());
      resolved.push_back(std::move(*r));
    }
  }

  const Matrix sims = CosineMatrix(seed.prototypes, vocab_embeddings);
  std::vector<std::vector<std::size_t>> rankings;
  rankings.reserve(seed.k());
  for (std::size_t w = 0; w < seed.k(); ++w) {
    rankings.push_back(TopKRow(sims.row(w), sims.cols()));
  }

  std::vector<double> data(seed.prototypes.data().begin(),
                           seed.prototypes.data().end());
  std::vector<std::size_t> cursor(seed.k(), 0);
  std::size_t count = seed.k();
  bool progressed = true;
  while (count < k && progressed) {
    progressed = false;
    for (std::size_t w = 0; w < seed.k() && count < k; ++w) {
      auto& c = cursor[w];
      while (c < rankings[w].size() && used.contains(rankings[w][c])) ++c;
      if (c == rankings[w].size()) continue;
      const std::size_t idx = rankings[w][c++];
      used.insert(idx);
      const auto row = vocab_embeddings.row(idx);
      data.insert(data.end(), row.begin(), row.end());
      seed.provenance.push_back("neighbour of '" + resolved[w].word +
                                "': '" + vocab[idx] + "'#" +
                                std::to_string(idx) + " (cos " +
                                FormatReal(sims(w, idx)) + ")");
      ++count;
      progressed = true;
    }
  }
  if (count < k) {
    Fail(ErrorCode::kInvalidArgument,
         "simexp: vocabulary exhausted after " + std::to_string(count) +
             " prototypes, K=" + std::to_string(k));
  }
  seed.method = PrototypeMethod::kSimilarityExpansion;
  seed.prototypes = Matrix(k, vocab_embeddings.cols(), std::move(data));
  return seed;
}

PrototypeSet LoadLinear(const std::filesystem::path& path) {
  Matrix m = ReadMatrix(path);
  PrototypeSet out{PrototypeMethod::kLoadedLinear, std::move(m), {}, {}, {}};
  for (std::size_t i = 0; i < out.k(); ++i) {
    out.provenance.push_back(path.filename().string() + " row " +
                             std::to_string(i));
  }
  return out;
}

}  // namespace tslx
