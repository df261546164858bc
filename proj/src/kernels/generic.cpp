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

#include <bit>

#include "stergm/kernels.hpp"

namespace stergm::kernels::generic {

std::size_t popcount(const Word* a, std::size_t words) {
  std::size_t count = 0;
  for (std::size_t w = 0; w < words; ++w) count += static_cast<std::size_t>(std::popcount(a[w]));
  return count;
}

std::size_t and_popcount(const Word* a, const Word* b, std::size_t words) {
  std::size_t count = 0;
  for (std::size_t w = 0; w < words; ++w) {
    count += static_cast<std::size_t>(std::popcount(a[w] & b[w]));
  }
  return count;
}

void bit_and(const Word* a, const Word* b, Word* out, std::size_t words) {
  for (std::size_t w = 0; w < words; ++w) out[w] = a[w] & b[w];
}

void bit_or(const Word* a, const Word* b, Word* out, std::size_t words) {
  for (std::size_t w = 0; w < words; ++w) out[w] = a[w] | b[w];
}

void bit_andnot(const Word* a, const Word* b, Word* out, std::size_t words) {
  for (std::size_t w = 0; w < words; ++w) out[w] = a[w] & ~b[w];
}

void project(const double* cols, std::size_t rows, std::size_t ncols, const double* coef,
             double* out) {
  for (std::size_t r = 0; r < rows; ++r) out[r] = 0.0;
  for (std::size_t k = 0; k < ncols; ++k) {
    const double c = coef[k];
    const double* col = cols + k * rows;
    for (std::size_t r = 0; r < rows; ++r) {
      // kept as a separate multiply and add so the AVX2 variant matches bit for bit
      const double term = c * col[r];
      out[r] = out[r] + term;
    }
  }
}

double dot(const double* a, const double* b, std::size_t n) {
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) sum += a[i] * b[i];
  return sum;
}

}  // namespace stergm::kernels::generic
