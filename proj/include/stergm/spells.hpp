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

#include <cstddef>
#include <span>
#include <vector>

#include "stergm/network.hpp"

namespace stergm {

/// Tie spells in a panel. A spell is a maximal run of consecutive snapshots
/// in which a dyad is tied; its length counts snapshots. Ties present in the
/// first snapshot start a spell there; spells still running at the last
/// snapshot are right-censored and kept out of `completed`.
struct SpellSummary {
  std::vector<std::size_t> completed;
  std::size_t censored = 0;

  double mean_completed() const;

  /// Discrete hazard by spell age a = 1..max_age: spells ending at length a
  /// over spells reaching length a (a censored spell counts as at risk only for
  /// ages below its observed length). Zero where no spell reaches the age.
  std::vector<double> hazard_by_age(std::size_t max_age) const;

  std::vector<std::size_t> censored_lengths;
};

SpellSummary tie_spells(std::span<const Network> series);

}  // namespace stergm
