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
#include "tslx/matrix.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "tslx/error.hpp"

namespace tslx {

std::size_t DTypeSize(DType dtype) {
  return dtype == DType::kF32 ? sizeof(float) : sizeof(double);
}

std::string_view DTypeName(DType dtype) {
  return dtype == DType::kF32 ? "f32" : "f64";
}

namespace {

void CheckShape(std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) {
    Fail(ErrorCode::kInvalidData,
         "matrix shape " + std::to_string(rows) + "x" + std::to_string(cols) +
             " violates rows >= 1, cols >= 1");
  }
  if (rows > std::numeric_limits<std::size_t>::max() / cols) {
    Fail(ErrorCode::kInvalidData, "matrix shape overflows size_t");
  }
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols, DType dtype)
    : rows_(rows), cols_(cols), dtype_(dtype) {
  CheckShape(rows, cols);
  data_.assign(rows * cols, 0.0);
}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> data,
               DType dtype)
    : rows_(rows), cols_(cols), dtype_(dtype), data_(std::move(data)) {
  CheckShape(rows, cols);
  if (data_.size() != rows * cols) {
    Fail(ErrorCode::kInvalidData,
         "matrix data length " + std::to_string(data_.size()) +
             " != rows*cols = " + std::to_string(rows * cols));
  }
  CheckFinite(*this, "matrix");
}

Matrix Matrix::FromRows(const std::vector<std::vector<double>>& rows,
                        DType dtype) {
  if (rows.empty()) Fail(ErrorCode::kInvalidData, "matrix needs >= 1 row");
  const std::size_t cols = rows.front().size();
  std::vector<double> data;
  data.reserve(rows.size() * cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      Fail(ErrorCode::kInvalidData, "ragged row " + std::to_string(r) +
                                        ": expected " + std::to_string(cols) +
                                        " values, got " +
                                        std::to_string(rows[r].size()));
    }
    data.insert(data.end(), rows[r].begin(), rows[r].end());
  }
  return Matrix(rows.size(), cols, std::move(data), dtype);
}

Matrix Matrix::SelectRows(std::span<const std::size_t> indices) const {
  std::vector<double> out;
  out.reserve(indices.size() * cols_);
  for (std::size_t idx : indices) {
    if (idx >= rows_) {
      Fail(ErrorCode::kInvalidArgument,
           "row index " + std::to_string(idx) + " out of range [0, " +
               std::to_string(rows_) + ")");
    }
    auto r = row(idx);
    out.insert(out.end(), r.begin(), r.end());
  }
  return Matrix(indices.size(), cols_, std::move(out), dtype_);
}

void CheckFinite(const Matrix& m, std::string_view what) {
  auto data = m.data();
  for (std::size_t i = 0; i < data.size(); ++i) {
    if (!std::isfinite(data[i])) {
      Fail(ErrorCode::kInvalidData,
           std::string(what) + ": non-finite value at row " +
               std::to_string(i / m.cols()) + ", col " +
               std::to_string(i % m.cols()));
    }
  }
}

}  // namespace tslx
