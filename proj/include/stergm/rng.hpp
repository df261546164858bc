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

#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>
#include <vector>

namespace stergm {

using Rng = std::mt19937_64;

/// Identifies one independent random stream: a base seed plus a path of
/// integers such as (purpose, phase, transition, chain, iteration).
/// Streams with different paths are decorrelated by SplitMix64 mixing.
struct StreamId {
  std::vector<std::uint64_t> path;

  StreamId() = default;
  StreamId(std::initializer_list<std::uint64_t> p) : path(p) {}

  StreamId child(std::uint64_t key) const {
    StreamId s = *this;
    s.path.push_back(key);
    return s;
  }
};

/// Top-level stream purposes.
namespace stream {
inline constexpr std::uint64_t kSimulate = 0x51;
inline constexpr std::uint64_t kFit = 0x52;
inline constexpr std::uint64_t kFinal = 0x53;
inline constexpr std::uint64_t kBridge = 0x54;
inline constexpr std::uint64_t kInitial = 0x55;
}  // namespace stream

std::uint64_t splitmix64(std::uint64_t& state);

std::uint64_t derive_seed(std::uint64_t seed, const StreamId& id);

inline Rng make_rng(std::uint64_t seed, const StreamId& id) { return Rng(derive_seed(seed, id)); }

}  // namespace stergm
