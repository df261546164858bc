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

#include <doctest.h>

#include <bit>
#include <cmath>
#include <cstring>
#include <random>
#include <vector>

#include "stergm/kernels.hpp"
#include "stergm/rng.hpp"

using namespace stergm;
using kernels::Word;

namespace {

std::vector<Word> RandomWords(Rng& rng, std::size_t n) {
  std::vector<Word> w(n);
  for (auto& x : w) x = rng();
  return w;
}

std::vector<double> RandomDoubles(Rng& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(-50.0, 50.0);
  std::vector<double> v(n);
  for (auto& x : v) x = u(rng);
  return v;
}

// Lengths that hit the vector body, the tail and the empty case.
const std::size_t kLengths[] = {0, 1, 3, 4, 5, 7, 8, 9, 15, 16, 17, 31, 64, 100, 257};

}  // namespace

TEST_CASE("scalar bit kernels agree with a per-word reference") {
  Rng rng(11);
  const auto& g = kernels::generic_table();
  for (std::size_t n : kLengths) {
    const auto a = RandomWords(rng, n);
    const auto b = RandomWords(rng, n);
    std::size_t pc = 0;
    std::size_t apc = 0;
    for (std::size_t i = 0; i < n; ++i) {
      pc += static_cast<std::size_t>(std::popcount(a[i]));
      apc += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
    }
    CHECK(g.popcount(a.data(), n) == pc);
    CHECK(g.and_popcount(a.data(), b.data(), n) == apc);
    std::vector<Word> out(n);
    g.bit_andnot(a.data(), b.data(), out.data(), n);
    for (std::size_t i = 0; i < n; ++i) CHECK(out[i] == (a[i] & ~b[i]));
  }
}

TEST_CASE("AVX2 kernels match the scalar reference") {
  const auto* v = kernels::avx2_table();
  if (v == nullptr) {
    MESSAGE("AVX2 variants unavailable on this machine; equivalence not exercised");
    return;
  }
  const auto& g = kernels::generic_table();
  Rng rng(12);
  for (int rep = 0; rep < 20; ++rep) {
    for (std::size_t n : kLengths) {
      const auto a = RandomWords(rng, n);
      const auto b = RandomWords(rng, n);
      CHECK(v->popcount(a.data(), n) == g.popcount(a.data(), n));
      CHECK(v->and_popcount(a.data(), b.data(), n) == g.and_popcount(a.data(), b.data(), n));
      for (auto op : {&kernels::KernelTable::bit_and, &kernels::KernelTable::bit_or,
                      &kernels::KernelTable::bit_andnot}) {
        std::vector<Word> x(n), y(n);
        (g.*op)(a.data(), b.data(), x.data(), n);
        (v->*op)(a.data(), b.data(), y.data(), n);
        CHECK(x == y);
        // in-place use, output aliasing the first input
        std::vector<Word> alias = a;
        (v->*op)(alias.data(), b.data(), alias.data(), n);
        CHECK(alias == x);
      }
    }
  }
}

TEST_CASE("projection is bit-identical across variants and dot agrees to rounding") {
  const auto& g = kernels::generic_table();
  const auto* v = kernels::avx2_table();
  Rng rng(13);
  for (std::size_t rows : kLengths) {
    for (std::size_t cols : {1, 2, 5}) {
      const auto m = RandomDoubles(rng, rows * cols);
      const auto coef = RandomDoubles(rng, cols);
      std::vector<double> ref(rows);
      g.project(m.data(), rows, cols, coef.data(), ref.data());
      for (std::size_t r = 0; r < rows; ++r) {
        double s = 0.0;
        for (std::size_t k = 0; k < cols; ++k) {
          const double prod = coef[k] * m[k * rows + r];
          s = s + prod;
        }
        CHECK(ref[r] == s);
      }
      if (v != nullptr) {
        std::vector<double> out(rows);
        v->project(m.data(), rows, cols, coef.data(), out.data());
        CHECK(std::memcmp(out.data(), ref.data(), rows * sizeof(double)) == 0);
      }
    }
    const auto a = RandomDoubles(rng, rows);
    const auto b = RandomDoubles(rng, rows);
    long double exact = 0.0L;
    double mag = 0.0;
    for (std::size_t i = 0; i < rows; ++i) {
      exact += static_cast<long double>(a[i]) * b[i];
      mag += std::abs(a[i] * b[i]);
    }
    const double tol = 1e-14 * (mag + 1.0);
    CHECK(std::abs(g.dot(a.data(), b.data(), rows) - static_cast<double>(exact)) <= tol);
    if (v != nullptr) CHECK(std::abs(v->dot(a.data(), b.data(), rows) - static_cast<double>(exact)) <= tol);
  }
}

TEST_CASE("active table is one of the variants") {
  const auto& a = kernels::active();
  const bool known = a.name == kernels::generic_table().name ||
                     (kernels::avx2_table() != nullptr && a.name == kernels::avx2_table()->name);
  CHECK(known);
}
