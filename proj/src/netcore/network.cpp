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

#include "stergm/network.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "stergm/error.hpp"

namespace stergm {

namespace {

std::string DyadText(Dyad d) {
  return "(" + std::to_string(d.tail + 1) + "," + std::to_string(d.head + 1) + ")";
}

void EraseValue(std::vector<int>& v, int value) {
  auto it = std::find(v.begin(), v.end(), value);
  *it = v.back();
  v.pop_back();
}

}  // namespace

Network::Network(int n, bool directed) : n_(n), directed_(directed) {
  if (n < 0) throw InputError("network size must be non-negative");
  words_ = (static_cast<std::size_t>(n) + 63) / 64;
  const std::size_t total = static_cast<std::size_t>(n) * words_;
  out_bits_.assign(total, 0);
  out_.resize(static_cast<std::size_t>(n));
  if (directed_) {
    in_bits_.assign(total, 0);
    in_.resize(static_cast<std::size_t>(n));
  }
}

Network Network::from_edges(int n, bool directed, std::span<const Dyad> ties) {
  Network y(n, directed);
  for (const Dyad& d : ties) {
    y.CheckDyad(d);
    if (y.has(d)) throw InputError("duplicate tie " + DyadText(d));
    y.Link(d.tail, d.head);
  }
  return y;
}

Network Network::from_out_rows(int n, bool directed, std::span<const Word> rows) {
  Network y(n, directed);
  if (rows.size() != y.out_bits_.size()) throw InputError("bit row size mismatch");
  for (int i = 0; i < n; ++i) {
    for (std::size_t w = 0; w < y.words_; ++w) {
      Word bits = rows[y.Row(i) + w];
      while (bits != 0) {
        const int j = static_cast<int>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
        if (j >= n || j == i) throw InputError("bit rows contain an invalid pair");
        if (directed) {
          y.Link(i, j);
        } else if (i < j) {
          if (!((rows[y.Row(j) + static_cast<std::size_t>(i) / 64] >> (i % 64)) & 1U)) {
            throw InputError("undirected bit rows are not symmetric");
          }
          y.Link(i, j);
        }
      }
    }
  }
  if (!directed && y.out_bits_ != std::vector<Word>(rows.begin(), rows.end())) {
    throw InputError("undirected bit rows are not symmetric");
  }
  return y;
}

std::size_t Network::dyad_count() const {
  const auto n = static_cast<std::size_t>(n_);
  if (n < 2) return 0;
  return directed_ ? n * (n - 1) : n * (n - 1) / 2;
}

void Network::CheckDyad(Dyad d) const {
  if (d.tail == d.head && d.tail >= 0 && d.tail < n_) {
    throw InputError("self-loop " + DyadText(d));
  }
  if (!is_valid_dyad(d)) {
    throw InputError("node index out of range in " + DyadText(d) + " for n=" + std::to_string(n_));
  }
}

void Network::SetBit(std::vector<Word>& bits, int row, int col, bool on) {
  Word& word = bits[Row(row) + static_cast<std::size_t>(col) / 64];
  const Word mask = Word{1} << (col % 64);
  word = on ? (word | mask) : (word & ~mask);
}

void Network::Link(int tail, int head) {
  SetBit(out_bits_, tail, head, true);
  out_[static_cast<std::size_t>(tail)].push_back(head);
  if (directed_) {
    SetBit(in_bits_, head, tail, true);
    in_[static_cast<std::size_t>(head)].push_back(tail);
  } else {
    SetBit(out_bits_, head, tail, true);
    out_[static_cast<std::size_t>(head)].push_back(tail);
  }
  ++edges_;
}

void Network::Unlink(int tail, int head) {
  SetBit(out_bits_, tail, head, false);
  EraseValue(out_[static_cast<std::size_t>(tail)], head);
  if (directed_) {
    SetBit(in_bits_, head, tail, false);
    EraseValue(in_[static_cast<std::size_t>(head)], tail);
  } else {
    SetBit(out_bits_, head, tail, false);
    EraseValue(out_[static_cast<std::size_t>(head)], tail);
  }
  --edges_;
}

void Network::add(Dyad d) {
  CheckDyad(d);
  if (has(d)) throw InputError("tie " + DyadText(d) + " already present");
  Link(d.tail, d.head);
}

void Network::remove(Dyad d) {
  CheckDyad(d);
  if (!has(d)) throw InputError("tie " + DyadText(d) + " not present");
  Unlink(d.tail, d.head);
}

void Network::toggle(Dyad d) {
  CheckDyad(d);
  if (has(d)) {
    Unlink(d.tail, d.head);
  } else {
    Link(d.tail, d.head);
  }
}

std::vector<Dyad> Network::edges() const {
  std::vector<Dyad> result;
  result.reserve(edges_);
  for (int i = 0; i < n_; ++i) {
    for (int j : out_neighbors(i)) {
      if (directed_ || i < j) result.push_back(Dyad{i, j});
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<Dyad> Network::all_dyads() const {
  std::vector<Dyad> result;
  result.reserve(dyad_count());
  for (int i = 0; i < n_; ++i) {
    for (int j = directed_ ? 0 : i + 1; j < n_; ++j) {
      if (i != j) result.push_back(Dyad{i, j});
    }
  }
  return result;
}

bool operator==(const Network& a, const Network& b) {
  return a.n_ == b.n_ && a.directed_ == b.directed_ && a.edges_ == b.edges_ &&
         a.out_bits_ == b.out_bits_;
}

bool same_shape(const Network& a, const Network& b) {
  return a.size() == b.size() && a.directed() == b.directed();
}

namespace {

Network Combine(const Network& a, const Network& b, kernels::BinaryFn op, const char* what) {
  if (!same_shape(a, b)) {
    throw InputError(std::string(what) + ": networks differ in size or directedness");
  }
  const auto lhs = a.out_bits();
  std::vector<Network::Word> rows(lhs.size());
  op(lhs.data(), b.out_bits().data(), rows.data(), rows.size());
  return Network::from_out_rows(a.size(), a.directed(), rows);
}

}  // namespace

Network set_union(const Network& a, const Network& b) {
  return Combine(a, b, kernels::active().bit_or, "union");
}

Network set_intersection(const Network& a, const Network& b) {
  return Combine(a, b, kernels::active().bit_and, "intersection");
}

Network set_difference(const Network& a, const Network& b) {
  return Combine(a, b, kernels::active().bit_andnot, "difference");
}

bool is_subset(const Network& sub, const Network& super) {
  if (!same_shape(sub, super)) throw InputError("subset test: networks differ in shape");
  const auto a = sub.out_bits();
  const auto b = super.out_bits();
  for (std::size_t w = 0; w < a.size(); ++w) {
    if ((a[w] & ~b[w]) != 0) return false;
  }
  return true;
}

Network relabel(const Network& y, std::span<const int> perm) {
  if (perm.size() != static_cast<std::size_t>(y.size())) throw InputError("permutation size mismatch");
  std::vector<Dyad> ties;
  ties.reserve(y.edge_count());
  for (const Dyad& d : y.edges()) {
    ties.push_back(canonical(Dyad{perm[static_cast<std::size_t>(d.tail)],
                                  perm[static_cast<std::size_t>(d.head)]},
                             y.directed()));
  }
  return Network::from_edges(y.size(), y.directed(), ties);
}

}  // namespace stergm
