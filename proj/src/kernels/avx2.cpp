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

#include <immintrin.h>

#include "stergm/kernels.hpp"

namespace stergm::kernels::avx2 {

namespace {

// Nibble-lookup popcount (Mula); per-byte counts summed into 64-bit lanes.
inline __m256i PopcountBytes(__m256i v) {
  const __m256i lookup = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4, 0, 1, 1,
                                          2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  const __m256i lo = _mm256_and_si256(v, low_mask);
  const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
  const __m256i counts =
      _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo), _mm256_shuffle_epi8(lookup, hi));
  return _mm256_sad_epu8(counts, _mm256_setzero_si256());
}

inline std::size_t HorizontalSum(__m256i acc) {
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  return static_cast<std::size_t>(lanes[0] + lanes[1] + lanes[2] + lanes[3]);
}

inline __m256i Load(const Word* p) { return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p)); }
inline void Store(Word* p, __m256i v) { _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v); }

}  // namespace

std::size_t popcount(const Word* a, std::size_t words) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t w = 0;
  for (; w + 4 <= words; w += 4) acc = _mm256_add_epi64(acc, PopcountBytes(Load(a + w)));
  std::size_t count = HorizontalSum(acc);
  for (; w < words; ++w) count += static_cast<std::size_t>(_mm_popcnt_u64(a[w]));
  return count;
}

std::size_t and_popcount(const Word* a, const Word* b, std::size_t words) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t w = 0;
  for (; w + 4 <= words; w += 4) {
    acc = _mm256_add_epi64(acc, PopcountBytes(_mm256_and_si256(Load(a + w), Load(b + w))));
  }
  std::size_t count = HorizontalSum(acc);
  for (; w < words; ++w) count += static_cast<std::size_t>(_mm_popcnt_u64(a[w] & b[w]));
  return count;
}

void bit_and(const Word* a, const Word* b, Word* out, std::size_t words) {
  std::size_t w = 0;
  for (; w + 4 <= words; w += 4) Store(out + w, _mm256_and_si256(Load(a + w), Load(b + w)));
  for (; w < words; ++w) out[w] = a[w] & b[w];
}

void bit_or(const Word* a, const Word* b, Word* out, std::size_t words) {
  std::size_t w = 0;
  for (; w + 4 <= words; w += 4) Store(out + w, _mm256_or_si256(Load(a + w), Load(b + w)));
  for (; w < words; ++w) out[w] = a[w] | b[w];
}

void bit_andnot(const Word* a, const Word* b, Word* out, std::size_t words) {
  std::size_t w = 0;
  // _mm256_andnot_si256(x, y) computes ~x & y
  for (; w + 4 <= words; w += 4) Store(out + w, _mm256_andnot_si256(Load(b + w), Load(a + w)));
  for (; w < words; ++w) out[w] = a[w] & ~b[w];
}

void project(const double* cols, std::size_t rows, std::size_t ncols, const double* coef,
             double* out) {
  for (std::size_t r = 0; r < rows; ++r) out[r] = 0.0;
  for (std::size_t k = 0; k < ncols; ++k) {
    const double* col = cols + k * rows;
    const __m256d c = _mm256_set1_pd(coef[k]);
    std::size_t r = 0;
    for (; r + 4 <= rows; r += 4) {
      const __m256d term = _mm256_mul_pd(c, _mm256_loadu_pd(col + r));
      _mm256_storeu_pd(out + r, _mm256_add_pd(_mm256_loadu_pd(out + r), term));
    }
    for (; r < rows; ++r) {
      const double term = coef[k] * col[r];
      out[r] = out[r] + term;
    }
  }
}

double dot(const double* a, const double* b, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_add_pd(acc0, _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
    acc1 = _mm256_add_pd(acc1,
                         _mm256_mul_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4)));
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, _mm256_add_pd(acc0, acc1));
  double sum = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
  for (; i < n; ++i) sum += a[i] * b[i];
  return sum;
}

}  // namespace stergm::kernels::avx2
