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

#include "stergm/spells.hpp"

#include <map>

#include "stergm/error.hpp"

namespace stergm {

double SpellSummary::mean_completed() const {
  if (completed.empty()) return 0.0;
  double sum = 0.0;
  for (std::size_t len : completed) sum += static_cast<double>(len);
  return sum / static_cast<double>(completed.size());
}

std::vector<double> SpellSummary::hazard_by_age(std::size_t max_age) const {
  std::vector<double> ended(max_age + 1, 0.0);
  std::vector<double> at_risk(max_age + 1, 0.0);
  for (std::size_t len : completed) {
    for (std::size_t a = 1; a <= std::min(len, max_age); ++a) at_risk[a] += 1.0;
    if (len <= max_age) ended[len] += 1.0;
  }
  for (std::size_t len : censored_lengths) {
    for (std::size_t a = 1; a < std::min(len, max_age + 1); ++a) at_risk[a] += 1.0;
  }
  std::vector<double> hazard(max_age, 0.0);
  for (std::size_t a = 1; a <= max_age; ++a) {
    if (at_risk[a] > 0.0) hazard[a - 1] = ended[a] / at_risk[a];
  }
  return hazard;
}

SpellSummary tie_spells(std::span<const Network> series) {
  SpellSummary summary;
  if (series.empty()) return summary;
  for (const auto& y : series) {
    if (!same_shape(y, series.front())) throw InputError("tie_spells: snapshots differ in shape");
  }
  std::map<Dyad, std::size_t> start;  // dyad -> snapshot index where its current spell began
  for (std::size_t t = 0; t < series.size(); ++t) {
    const Network& y = series[t];
    for (auto it = start.begin(); it != start.end();) {
      if (!y.has(it->first)) {
        summary.completed.push_back(t - it->second);
        it = start.erase(it);
      } else {
        ++it;
      }
    }
    for (const Dyad& d : y.edges()) start.try_emplace(d, t);
  }
  for (const auto& [d, t0] : start) {
    summary.censored_lengths.push_back(series.size() - t0);
    ++summary.censored;
  }
  return summary;
}

}  // namespace stergm
