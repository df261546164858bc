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

#include <cstdlib>
#include <string_view>

#include "stergm/kernels.hpp"

namespace stergm::kernels {

const KernelTable& generic_table() {
  static const KernelTable table{"generic",       generic::popcount, generic::and_popcount,
                                 generic::bit_and, generic::bit_or,  generic::bit_andnot,
                                 generic::project, generic::dot};
  return table;
}

const KernelTable* avx2_table() {
#if defined(STERGM_HAVE_AVX2)
  static const bool supported = [] {
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
  }();
  static const KernelTable table{"avx2",       avx2::popcount, avx2::and_popcount,
                                 avx2::bit_and, avx2::bit_or,  avx2::bit_andnot,
                                 avx2::project, avx2::dot};
  return supported ? &table : nullptr;
#else
  return nullptr;
#endif
}

namespace {

const KernelTable& Select() {
  const char* forced = std::getenv("STERGM_SIMD");
  if (forced != nullptr && std::string_view(forced) == "generic") return generic_table();
  if (const KernelTable* table = avx2_table()) return *table;
  return generic_table();
}

}  // namespace

const KernelTable& active() {
  static const KernelTable& table = Select();
  return table;
}

}  // namespace stergm::kernels
