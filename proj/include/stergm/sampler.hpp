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
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "stergm/network.hpp"
#include "stergm/phase_statistics.hpp"
#include "stergm/rng.hpp"
#include "stergm/sample_matrix.hpp"

namespace stergm {

enum class Proposal {
  uniform_free_dyad,  // symmetric: one free dyad uniformly at random
  tnt,                // tie/no-tie: half the time toggle one of the phase's own ties
};

struct SamplerConfig {
  /// Proposals discarded before the first draw; default 10 x free dyads.
  std::optional<std::size_t> burn_in;
  /// Proposals between retained draws; default one per free dyad.
  std::optional<std::size_t> interval;
  std::size_t n_draws = 1000;
  Proposal proposal = Proposal::uniform_free_dyad;
  std::uint64_t seed = 0;
  /// Formation draws never give a node more than this many out-ties
  /// (undirected: ties).
  std::optional<int> max_out_degree;

  /// Throws InputError when a count is zero or the degree cap is negative.
  void validate() const;
  std::size_t burn_in_for(std::size_t free_dyads) const;
  std::size_t interval_for(std::size_t free_dyads) const;
};

/// The states one phase may reach from the previous network: supersets of
/// the anchor for formation, subsets for dissolution.
class PhaseSpace {
 public:
  PhaseSpace(Phase phase, Network anchor);

  Phase phase() const { return phase_; }
  const Network& anchor() const { return anchor_; }
  /// Toggleable dyads: empty dyads of the anchor (formation) or its ties (dissolution), sorted.
  const std::vector<Dyad>& free_dyads() const { return free_; }
  bool contains(const Network& y) const;

 private:
  Phase phase_;
  Network anchor_;
  std::vector<Dyad> free_;
};

/// Called for each retained draw with the state and its statistic vector.
using DrawVisitor = std::function<void(const Network&, std::span<const double>)>;

struct ChainOptions {
  /// Starting state; defaults to the anchor. Must lie in the phase space.
  const Network* start = nullptr;
  bool keep_networks = false;
  DrawVisitor visitor;
  /// Random stream, combined with SamplerConfig::seed.
  StreamId stream;
};

struct PhaseDraws {
  SampleMatrix stats;             // n_draws x statistics, g(y, anchor) per draw
  std::vector<Network> networks;  // filled when keep_networks
  Network last;                   // final chain state
  std::size_t proposals = 0;
  std::size_t accepted = 0;
};

/// Metropolis-Hastings chain over one phase space targeting
/// P(y) ∝ exp(eta · g(y, anchor)).
PhaseDraws sample_phase(const PhaseSpace& space, const PhaseStatistics& stats,
                        std::span<const double> eta, const SamplerConfig& cfg,
                        const ChainOptions& options = {});

}  // namespace stergm
