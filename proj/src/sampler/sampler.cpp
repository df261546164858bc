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

#include "stergm/sampler.hpp"

#include <cmath>
#include <string>

#include "stergm/error.hpp"

namespace stergm {

void SamplerConfig::validate() const {
  if (burn_in && *burn_in == 0) throw InputError("sampler burn_in must be positive");
  if (interval && *interval == 0) throw InputError("sampler interval must be positive");
  if (n_draws == 0) throw InputError("sampler n_draws must be positive");
  if (max_out_degree && *max_out_degree < 0) throw InputError("max_out_degree must be non-negative");
}

std::size_t SamplerConfig::burn_in_for(std::size_t free_dyads) const {
  return burn_in ? *burn_in : 10 * std::max<std::size_t>(free_dyads, 1);
}

std::size_t SamplerConfig::interval_for(std::size_t free_dyads) const {
  return interval ? *interval : std::max<std::size_t>(free_dyads, 1);
}

PhaseSpace::PhaseSpace(Phase phase, Network anchor) : phase_(phase), anchor_(std::move(anchor)) {
  if (phase_ == Phase::dissolution) {
    free_ = anchor_.edges();
  } else {
    free_.reserve(anchor_.dyad_count() - anchor_.edge_count());
    for (const Dyad& d : anchor_.all_dyads()) {
      if (!anchor_.has(d)) free_.push_back(d);
    }
  }
}

bool PhaseSpace::contains(const Network& y) const {
  if (!same_shape(y, anchor_)) return false;
  return phase_ == Phase::formation ? is_subset(anchor_, y) : is_subset(y, anchor_);
}

namespace {

int CappedDegree(const Network& y, int v) { return y.directed() ? y.out_degree(v) : y.degree(v); }

void CheckCap(const Network& y, int cap, const char* what) {
  for (int v = 0; v < y.size(); ++v) {
    if (CappedDegree(y, v) > cap) {
      throw InfeasibleConstraint(std::string(what) + ": node " + std::to_string(v + 1) + " has " +
                                 std::to_string(CappedDegree(y, v)) + " ties, above max_out_degree " +
                                 std::to_string(cap));
    }
  }
}

// Tie/no-tie proposal probability of toggling a dyad, given how many free
// dyads are currently on and whether this one is.
double TntProbability(std::size_t on_count, std::size_t free_count, bool is_on) {
  const double f = static_cast<double>(free_count);
  if (on_count == 0) return 1.0 / f;
  return 0.5 / f + (is_on ? 0.5 / static_cast<double>(on_count) : 0.0);
}

}  // namespace

PhaseDraws sample_phase(const PhaseSpace& space, const PhaseStatistics& stats,
                        std::span<const double> eta, const SamplerConfig& cfg,
                        const ChainOptions& options) {
  cfg.validate();
  if (eta.size() != stats.size()) throw InputError("coefficient count does not match statistics");
  for (double e : eta) {
    if (!std::isfinite(e)) throw InputError("coefficients must be finite");
  }
  const Network& anchor = space.anchor();
  const bool constrained = cfg.max_out_degree && space.phase() == Phase::formation;
  if (constrained) CheckCap(anchor, *cfg.max_out_degree, "previous network violates the degree cap");

  Network y = options.start ? *options.start : anchor;
  if (options.start) {
    if (!space.contains(y)) throw InputError("chain start is outside the phase space");
    if (constrained) CheckCap(y, *cfg.max_out_degree, "chain start violates the degree cap");
  }

  const auto& free = space.free_dyads();
  const std::size_t p = stats.size();
  PhaseDraws out;
  out.stats = SampleMatrix(cfg.n_draws, p);
  std::vector<double> g = stats.evaluate(y, anchor);

  auto retain = [&](std::size_t draw) {
    out.stats.set_row(draw, g);
    if (options.keep_networks) out.networks.push_back(y);
    if (options.visitor) options.visitor(y, g);
  };

  if (free.empty()) {
    for (std::size_t s = 0; s < cfg.n_draws; ++s) retain(s);
    out.last = std::move(y);
    return out;
  }

  Rng rng = make_rng(cfg.seed, options.stream);
  std::uniform_int_distribution<std::size_t> pick_free(0, free.size() - 1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  // free-dyad indices currently present in y, for tie/no-tie proposals
  const bool tnt = cfg.proposal == Proposal::tnt;
  std::vector<std::size_t> on_list;
  std::vector<std::ptrdiff_t> position;
  if (tnt) {
    position.assign(free.size(), -1);
    for (std::size_t f = 0; f < free.size(); ++f) {
      if (y.has(free[f])) {
        position[f] = static_cast<std::ptrdiff_t>(on_list.size());
        on_list.push_back(f);
      }
    }
  }

  const std::size_t burn = cfg.burn_in_for(free.size());
  const std::size_t interval = cfg.interval_for(free.size());
  const std::size_t total = burn + cfg.n_draws * interval;
  std::vector<double> delta(p);
  std::size_t draw = 0;

  // A hold slot keeps the chain aperiodic; without it, a chain that accepts
  // every toggle alternates parity and never mixes over the free dyads.
  std::uniform_int_distribution<std::size_t> pick_slot(0, free.size());

  for (std::size_t step = 1; step <= total; ++step) {
    if (pick_slot(rng) == free.size()) {
      ++out.proposals;
      if (step > burn && (step - burn) % interval == 0) retain(draw++);
      continue;
    }
    std::size_t f = 0;
    if (tnt && !on_list.empty() && unit(rng) < 0.5) {
      f = on_list[std::uniform_int_distribution<std::size_t>(0, on_list.size() - 1)(rng)];
    } else {
      f = pick_free(rng);
    }
    const Dyad d = free[f];
    const bool present = y.has(d);
    ++out.proposals;

    bool feasible = true;
    if (constrained && !present) {
      const int cap = *cfg.max_out_degree;
      feasible = CappedDegree(y, d.tail) < cap && (y.directed() || CappedDegree(y, d.head) < cap);
    }
    if (feasible) {
      stats.change(y, anchor, d, delta);
      double log_ratio = 0.0;
      for (std::size_t k = 0; k < p; ++k) log_ratio += eta[k] * delta[k];
      if (tnt) {
        const std::size_t on_after = present ? on_list.size() - 1 : on_list.size() + 1;
        log_ratio += std::log(TntProbability(on_after, free.size(), !present)) -
                     std::log(TntProbability(on_list.size(), free.size(), present));
      }
      if (log_ratio >= 0.0 || unit(rng) < std::exp(log_ratio)) {
        y.toggle(d);
        for (std::size_t k = 0; k < p; ++k) g[k] += delta[k];
        ++out.accepted;
        if (tnt) {
          if (present) {
            const auto at = static_cast<std::size_t>(position[f]);
            on_list[at] = on_list.back();
            position[on_list[at]] = static_cast<std::ptrdiff_t>(at);
            on_list.pop_back();
            position[f] = -1;
          } else {
            position[f] = static_cast<std::ptrdiff_t>(on_list.size());
            on_list.push_back(f);
          }
        }
      }
    }
    if (step > burn && (step - burn) % interval == 0) retain(draw++);
  }
  out.last = std::move(y);
  return out;
}

}  // namespace stergm
