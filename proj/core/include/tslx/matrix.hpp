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
#include <span>
#include <string_view>
#include <vector>

namespace tslx {

//! On-disk element type. Values are always held as double in memory; f32
//! matrices are widened on load and narrowed on write.
enum class DType : std::uint8_t { kF32 = 1, kF64 = 2 };

std::size_t DTypeSize(DType dtype);
std::string_view DTypeName(DType dtype);

//! Dense row-major matrix of finite reals.
//!
//! Invariants: rows >= 1, cols >= 1, data.size() == rows * cols, every value
//! finite. Constructors enforce them and throw tslx::Error otherwise.
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, DType dtype = DType::kF64);
  Matrix(std::size_t rows, std::size_t cols, std::vector<double> data,
         DType dtype = DType::kF64);

  static Matrix FromRows(const std::vector<std::vector<double>>& rows,
                         DType dtype = DType::kF64);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return data_.size(); }
  DType dtype() const noexcept { return dtype_; }
  void set_dtype(DType dtype) noexcept { dtype_ = dtype; }

  double operator()(std::size_t r, std::size_t c) const noexcept {
    return data_[r * cols_ + c];
  }
  double& operator()(std::size_t r, std::size_t c) noexcept {
    return data_[r * cols_ + c];
  }

  std::span<const double> row(std::size_t r) const noexcept {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<double> row(std::size_t r) noexcept {
    return {data_.data() + r * cols_, cols_};
  }

  std::span<const double> data() const noexcept { return data_; }
  std::span<double> data() noexcept { return data_; }

  //! New matrix holding the given rows, in the given order.
  Matrix SelectRows(std::span<const std::size_t> indices) const;

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  DType dtype_;
  std::vector<double> data_;
};

//! Throws kInvalidData naming the first non-finite entry.
void CheckFinite(const Matrix& m, std::string_view what);

}  // namespace tslx
