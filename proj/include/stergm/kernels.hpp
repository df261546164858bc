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

// Data-parallel inner loops shared by the network and estimation code.
//
// Every kernel has a portable scalar reference in `generic` and, where the
// build enables it, an AVX2 variant. `active()` picks the best variant the
// running CPU supports; STERGM_SIMD=generic in the environment forces the
// scalar path. The bit kernels and `project` are bit-identical across
// variants; `dot` reassociates its sum and agrees to rounding.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace stergm::kernels {

using Word = std::uint64_t;

/// Set bits in a[0..words).
using PopcountFn = std::size_t (*)(const Word* a, std::size_t words);
/// Set bits in (a & b).
using AndPopcountFn = std::size_t (*)(const Word* a, const Word* b, std::size_t words);
/// out = a OP b, elementwise. `out` may alias either input.
using BinaryFn = void (*)(const Word* a, const Word* b, Word* out, std::size_t words);
/// out[r] = sum_k coef[k] * cols[k * rows + r], accumulated in k order.
using ProjectFn = void (*)(const double* cols, std::size_t rows, std::size_t ncols,
                           const double* coef, double* out);
using DotFn = double (*)(const double* a, const double* b, std::size_t n);

struct KernelTable {
  std::string_view name;
  PopcountFn popcount;
  AndPopcountFn and_popcount;
  BinaryFn bit_and;
  BinaryFn bit_or;
  BinaryFn bit_andnot;  // a & ~b
  ProjectFn project;
  DotFn dot;
};

namespace generic {
std::size_t popcount(const Word* a, std::size_t words);
std::size_t and_popcount(const Word* a, const Word* b, std::size_t words);
void bit_and(const Word* a, const Word* b, Word* out, std::size_t words);
void bit_or(const Word* a, const Word* b, Word* out, std::size_t words);
void bit_andnot(const Word* a, const Word* b, Word* out, std::size_t words);
void project(const double* cols, std::size_t rows, std::size_t ncols, const double* coef,
             double* out);
double dot(const double* a, const double* b, std::size_t n);
}  // namespace generic

namespace avx2 {
std::size_t popcount(const Word* a, std::size_t words);
std::size_t and_popcount(const Word* a, const Word* b, std::size_t words);
void bit_and(const Word* a, const Word* b, Word* out, std::size_t words);
void bit_or(const Word* a, const Word* b, Word* out, std::size_t words);
void bit_andnot(const Word* a, const Word* b, Word* out, std::size_t words);
void project(const double* cols, std::size_t rows, std::size_t ncols, const double* coef,
             double* out);
double dot(const double* a, const double* b, std::size_t n);
}  // namespace avx2

const KernelTable& generic_table();

/// nullptr when the AVX2 variants were not compiled in or the CPU lacks AVX2.
const KernelTable* avx2_table();

/// Variant used by the library.
const KernelTable& active();

}  // namespace stergm::kernels
