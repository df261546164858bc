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

#include "stergm/sample_matrix.hpp"

#include <algorithm>

#include "stergm/error.hpp"
#include "stergm/kernels.hpp"

namespace stergm {

void SampleMatrix::set_row(std::size_t r, std::span<const double> values) {
  for (std::size_t c = 0; c < cols_; ++c) at(r, c) = values[c];
}

std::vector<double> SampleMatrix::row(std::size_t r) const {
  std::vector<double> out(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out[c] = at(r, c);
  return out;
}

std::vector<double> SampleMatrix::column_means() const {
  std::vector<double> means(cols_, 0.0);
  if (rows_ == 0) return means;
  for (std::size_t c = 0; c < cols_; ++c) {
    double sum = 0.0;
    for (double v : column(c)) sum += v;
    means[c] = sum / static_cast<double>(rows_);
  }
  return means;
}

std::vector<double> SampleMatrix::project(std::span<const double> coef) const {
  if (coef.size() != cols_) throw InputError("projection length mismatch");
  std::vector<double> out(rows_);
  kernels::active().project(data_.data(), rows_, cols_, coef.data(), out.data());
  return out;
}

SampleMatrix SampleMatrix::slice(std::size_t first, std::size_t count) const {
  SampleMatrix out(count, cols_);
  for (std::size_t c = 0; c < cols_; ++c) {
    const auto src = column(c).subspan(first, count);
    std::copy(src.begin(), src.end(), out.column(c).begin());
  }
  return out;
}

SampleMatrix SampleMatrix::concat(std::span<const SampleMatrix> parts) {
  if (parts.empty()) return {};
  std::size_t rows = 0;
  const std::size_t cols = parts.front().cols();
  for (const auto& p : parts) {
    if (p.cols() != cols) throw InputError("cannot stack samples with different statistic counts");
    rows += p.rows();
  }
  SampleMatrix out(rows, cols);
  for (std::size_t c = 0; c < cols; ++c) {
    std::size_t offset = 0;
    for (const auto& p : parts) {
      const auto src = p.column(c);
      std::copy(src.begin(), src.end(), out.column(c).begin() + static_cast<std::ptrdiff_t>(offset));
      offset += p.rows();
    }
  }
  return out;
}

}  // namespace stergm
