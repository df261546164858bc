// Copyright 2026 the stergm authors
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
#include <span>
#include <vector>

namespace stergm {

/// Draws-by-statistics matrix stored column-major, so each statistic is a
/// contiguous column for the projection kernels.
class SampleMatrix {
 public:
  SampleMatrix() = default;
  SampleMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& at(std::size_t r, std::size_t c) { return data_[c * rows_ + r]; }
  double at(std::size_t r, std::size_t c) const { return data_[c * rows_ + r]; }

  std::span<const double> column(std::size_t c) const { return {data_.data() + c * rows_, rows_}; }
  std::span<double> column(std::size_t c) { return {data_.data() + c * rows_, rows_}; }
  const double* data() const { return data_.data(); }

  void set_row(std::size_t r, std::span<const double> values);
  std::vector<double> row(std::size_t r) const;

  std::vector<double> column_means() const;

  /// Row-wise dot products with `coef` through the active projection kernel.
  std::vector<double> project(std::span<const double> coef) const;

  /// Rows [first, first + count) as a new matrix.
  SampleMatrix slice(std::size_t first, std::size_t count) const;

  /// Stacks matrices with equal column counts.
  static SampleMatrix concat(std::span<const SampleMatrix> parts);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

}  // namespace stergm
