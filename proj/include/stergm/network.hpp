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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "stergm/kernels.hpp"

namespace stergm {

/// A node pair. Nodes are 0-based inside the library; files and the CLI use 1-based labels.
struct Dyad {
  int tail = 0;
  int head = 0;

  friend constexpr auto operator<=>(const Dyad&, const Dyad&) = default;
};

/// Canonical form of a pair: (min, max) when undirected, unchanged when directed.
constexpr Dyad canonical(Dyad d, bool directed) {
  if (!directed && d.tail > d.head) return Dyad{d.head, d.tail};
  return d;
}

/// Binary network on a fixed node set without self-loops.
///
/// Ties are held twice and kept in sync: as dense bit rows (out-rows and,
/// for directed networks, in-rows) for O(1) membership and word-parallel
/// set algebra, and as per-node neighbor lists for iteration. Undirected
/// networks store each tie once in canonical form and symmetrically in the
/// bit rows and neighbor lists.
class Network {
 public:
  using Word = kernels::Word;

  Network() = default;
  Network(int n, bool directed);

  /// Throws InputError on self-loops, out-of-range nodes or duplicate pairs
  /// (an undirected pair listed in both orientations counts as a duplicate).
  static Network from_edges(int n, bool directed, std::span<const Dyad> ties);

  int size() const { return n_; }
  bool directed() const { return directed_; }
  std::size_t edge_count() const { return edges_; }
  std::size_t words_per_row() const { return words_; }

  /// Number of dyads in the full dyad set: n(n-1) directed, n(n-1)/2 undirected.
  std::size_t dyad_count() const;

  bool has(int tail, int head) const {
    return (out_bits_[Row(tail) + static_cast<std::size_t>(head) / 64] >> (head % 64)) & 1U;
  }
  bool has(Dyad d) const { return has(d.tail, d.head); }

  /// Toggle operations; the pair must be a valid non-loop dyad. `add` of a
  /// present tie and `remove` of an absent one throw InputError.
  void add(Dyad d);
  void remove(Dyad d);
  void toggle(Dyad d);

  /// Out-neighbors (undirected: all neighbors), unordered.
  const std::vector<int>& out_neighbors(int i) const { return out_[static_cast<std::size_t>(i)]; }
  /// In-neighbors (undirected: all neighbors), unordered.
  const std::vector<int>& in_neighbors(int i) const {
    return directed_ ? in_[static_cast<std::size_t>(i)] : out_[static_cast<std::size_t>(i)];
  }
  int out_degree(int i) const { return static_cast<int>(out_neighbors(i).size()); }
  int in_degree(int i) const { return static_cast<int>(in_neighbors(i).size()); }
  /// Undirected degree; for directed networks, in + out.
  int degree(int i) const { return directed_ ? out_degree(i) + in_degree(i) : out_degree(i); }

  std::span<const Word> out_row(int i) const {
    return {out_bits_.data() + Row(i), words_};
  }
  std::span<const Word> in_row(int i) const {
    const auto& bits = directed_ ? in_bits_ : out_bits_;
    return {bits.data() + Row(i), words_};
  }

  /// Ties in canonical form, sorted.
  std::vector<Dyad> edges() const;

  /// Every dyad in the full dyad set, canonical and sorted.
  std::vector<Dyad> all_dyads() const;

  /// Pairs that could be ties: valid nodes, no self-loop.
  bool is_valid_dyad(Dyad d) const {
    return d.tail >= 0 && d.head >= 0 && d.tail < n_ && d.head < n_ && d.tail != d.head;
  }

  /// Builds a network from out-row bits (n rows of words_per_row words). For
  /// undirected networks the rows must be symmetric.
  static Network from_out_rows(int n, bool directed, std::span<const Word> rows);
  std::span<const Word> out_bits() const { return out_bits_; }

  friend bool operator==(const Network& a, const Network& b);

 private:
  std::size_t Row(int i) const { return static_cast<std::size_t>(i) * words_; }
  void SetBit(std::vector<Word>& bits, int row, int col, bool on);
  void CheckDyad(Dyad d) const;
  void Link(int tail, int head);
  void Unlink(int tail, int head);

  int n_ = 0;
  bool directed_ = false;
  std::size_t words_ = 0;
  std::size_t edges_ = 0;
  std::vector<Word> out_bits_;
  std::vector<Word> in_bits_;  // empty when undirected
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;  // empty when undirected
};

bool same_shape(const Network& a, const Network& b);

/// Set algebra over the tie sets; operands must share size and directedness.
Network set_union(const Network& a, const Network& b);
Network set_intersection(const Network& a, const Network& b);
Network set_difference(const Network& a, const Network& b);
bool is_subset(const Network& sub, const Network& super);

/// Network with node i relabeled to perm[i].
Network relabel(const Network& y, std::span<const int> perm);

}  // namespace stergm
