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

// Literal, loop-based reference implementations used only by tests. They
// follow the textbook definitions directly and share no code with core/.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <map>
#include <random>
#include <utility>
#include <vector>

namespace tslx::oracle {

using Vec = std::vector<double>;
using Mat = std::vector<Vec>;

inline double Mean(const Vec& x) {
  double s = 0.0;
  for (double v : x) s += v;
  return s / static_cast<double>(x.size());
}

inline double PopStd(const Vec& x) {
  const double m = Mean(x);
  double s = 0.0;
  for (double v : x) s += (v - m) * (v - m);
  return std::sqrt(s / static_cast<double>(x.size()));
}

// mean, std, autocorr, neg turning, pos turning, mean abs diff, slope
inline Vec Features(const Vec& x) {
  const std::size_t n = x.size();
  const double m = Mean(x);
  double var = 0.0;
  for (double v : x) var += (v - m) * (v - m);
  double lag = 0.0;
  for (std::size_t t = 0; t + 1 < n; ++t) lag += (x[t] - m) * (x[t + 1] - m);
  int neg = 0;
  int pos = 0;
  for (std::size_t t = 1; t + 1 < n; ++t) {
    if (x[t] < x[t - 1] && x[t] < x[t + 1]) ++neg;
    if (x[t] > x[t - 1] && x[t] > x[t + 1]) ++pos;
  }
  double mad = 0.0;
  for (std::size_t t = 1; t < n; ++t) mad += std::fabs(x[t] - x[t - 1]);
  mad /= static_cast<double>(n - 1);
  // Normal equations for y = alpha + beta t.
  double st = 0.0, sy = 0.0, stt = 0.0, sty = 0.0;
  for (std::size_t t = 0; t < n; ++t) {
    const double tt = static_cast<double>(t);
    st += tt;
    sy += x[t];
    stt += tt * tt;
    sty += tt * x[t];
  }
  const double dn = static_cast<double>(n);
  const double slope = (dn * sty - st * sy) / (dn * stt - st * st);
  return {m, std::sqrt(var / dn), var == 0.0 ? 0.0 : lag / var,
          static_cast<double>(neg), static_cast<double>(pos), mad, slope};
}

// groups[i] = feature rows of group i
inline double DIntra(const std::vector<Mat>& groups) {
  double total = 0.0;
  for (const auto& g : groups) {
    for (std::size_t k = 0; k < g.front().size(); ++k) {
      Vec col;
      for (const auto& row : g) col.push_back(row[k]);
      total += PopStd(col);
    }
  }
  return total;
}

inline double DInter(const std::vector<Mat>& groups) {
  double total = 0.0;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    for (std::size_t j = i + 1; j < groups.size(); ++j) {
      for (std::size_t k = 0; k < groups[i].front().size(); ++k) {
        Vec a, b;
        for (const auto& row : groups[i]) a.push_back(row[k]);
        for (const auto& row : groups[j]) b.push_back(row[k]);
        total += std::fabs(Mean(a) - Mean(b));
      }
    }
  }
  return total;
}

inline double Euclid(const Vec& a, const Vec& b) {
  double s = 0.0;
  for (std::size_t d = 0; d < a.size(); ++d) s += (a[d] - b[d]) * (a[d] - b[d]);
  return std::sqrt(s);
}

inline double Silhouette(const Mat& pts, const std::vector<std::size_t>& labels) {
  const std::size_t n = pts.size();
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    std::map<std::size_t, std::pair<double, std::size_t>> acc;
    for (std::size_t j = 0; j < n; ++j) {
      auto& slot = acc[labels[j]];
      if (j != i) slot.first += Euclid(pts[i], pts[j]);
      slot.second += 1;
    }
    const auto own = acc[labels[i]];
    if (own.second == 1) continue;
    const double a = own.first / static_cast<double>(own.second - 1);
    double b = std::numeric_limits<double>::infinity();
    for (const auto& [label, s] : acc) {
      if (label == labels[i]) continue;
      b = std::min(b, s.first / static_cast<double>(s.second));
    }
    const double m = std::max(a, b);
    total += m == 0.0 ? 0.0 : (b - a) / m;
  }
  return total / static_cast<double>(n);
}

inline double Cosine(const Vec& a, const Vec& b) {
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (std::size_t d = 0; d < a.size(); ++d) {
    dot += a[d] * b[d];
    na += a[d] * a[d];
    nb += b[d] * b[d];
  }
  return dot / (std::sqrt(na) * std::sqrt(nb));
}

// Full stable sort by descending score; index order breaks ties.
inline std::vector<std::size_t> FullSortTopK(const Vec& scores, std::size_t k) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < scores.size(); ++i) idx.push_back(i);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) {
    return scores[x] > scores[y];
  });
  idx.resize(k);
  return idx;
}

// Cyclic Jacobi eigen-decomposition of a symmetric matrix. Returns
// eigenvalues descending with matching unit eigenvectors (as rows).
inline std::pair<Vec, Mat> JacobiEigen(Mat a) {
  const std::size_t n = a.size();
  Mat v(n, Vec(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) v[i][i] = 1.0;
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
    if (off < 1e-30) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (a[p][q] == 0.0) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v[k][p], vkq = v[k][q];
          v[k][p] = c * vkp - s * vkq;
          v[k][q] = s * vkp + c * vkq;
        }
      }
    }
  }
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return a[x][x] > a[y][y]; });
  Vec values;
  Mat vectors;
  for (std::size_t i : order) {
    values.push_back(a[i][i]);
    Vec col(n);
    for (std::size_t k = 0; k < n; ++k) col[k] = v[k][i];
    vectors.push_back(col);
  }
  return {values, vectors};
}

// Population covariance of the rows of x.
inline Mat Covariance(const Mat& x) {
  const std::size_t n = x.size(), d = x.front().size();
  Vec mean(d, 0.0);
  for (const auto& row : x)
    for (std::size_t j = 0; j < d; ++j) mean[j] += row[j];
  for (double& m : mean) m /= static_cast<double>(n);
  Mat c(d, Vec(d, 0.0));
  for (const auto& row : x)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        c[i][j] += (row[i] - mean[i]) * (row[j] - mean[j]);
  for (auto& row : c)
    for (double& v : row) v /= static_cast<double>(n);
  return c;
}

// Test-instance generator; deliberately std::mt19937_64, not tslx::Rng.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : engine_(seed) {}
  double Uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
  }
  std::size_t Index(std::size_t lo, std::size_t hi) {  // inclusive
    return std::uniform_int_distribution<std::size_t>(lo, hi)(engine_);
  }
  Vec Vector(std::size_t n, double lo = -5.0, double hi = 5.0) {
    Vec v(n);
    for (double& x : v) x = Uniform(lo, hi);
    return v;
  }
  Mat Matrix(std::size_t r, std::size_t c, double lo = -5.0, double hi = 5.0) {
    Mat m(r);
    for (auto& row : m) row = Vector(c, lo, hi);
    return m;
  }
  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace tslx::oracle
