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

#include "stergm/covariates.hpp"
#include "stergm/phase_statistics.hpp"
#include "stergm/sampler.hpp"
#include "stergm/series_io.hpp"
#include "stergm/terms.hpp"
#include "stergm/transition.hpp"

namespace stergm {

/// A ModelSpec with shorthand expanded, statistics bound to covariates and
/// coefficients present for both phases.
class StergmModel {
 public:
  /// Throws InputError when either coefficient block is missing or mis-sized
  /// (a phase without terms needs no coefficients).
  StergmModel(const ModelSpec& model, const Covariates& covariates, int n, bool directed);

  const ModelSpec& spec() const { return spec_; }
  const PhaseStatistics& statistics(Phase p) const {
    return p == Phase::formation ? formation_ : dissolution_;
  }
  std::span<const double> eta(Phase p) const { return spec_.theta(p); }

 private:
  ModelSpec spec_;
  PhaseStatistics formation_;
  PhaseStatistics dissolution_;
};

/// One step: independent formation and dissolution draws given `prev`.
/// The chains use streams (simulate, phase, t).
TransitionDecomposition simulate_transition(const Network& prev, const StergmModel& model,
                                            const SamplerConfig& cfg, std::size_t t = 1);

Network simulate_step(const Network& prev, const StergmModel& model, const SamplerConfig& cfg,
                      std::size_t t = 1);

/// y0 followed by `steps` simulated networks; deterministic given cfg.seed.
NetworkSeries simulate_series(const Network& y0, const StergmModel& model, std::size_t steps,
                              const SamplerConfig& cfg, const Covariates& covariates = {});

}  // namespace stergm
