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

#include "stergm/simulate.hpp"

#include "stergm/error.hpp"

namespace stergm {

namespace {

ModelSpec Checked(const ModelSpec& model, const Covariates& covariates) {
  ModelSpec spec = expand_model(model, covariates);
  for (Phase p : {Phase::formation, Phase::dissolution}) {
    if (spec.theta(p).size() != spec.terms(p).size()) {
      throw InputError(std::string(to_string(p)) + " block needs a coefficient for every term");
    }
  }
  return spec;
}

}  // namespace

StergmModel::StergmModel(const ModelSpec& model, const Covariates& covariates, int n, bool directed)
    : spec_(Checked(model, covariates)),
      formation_(Phase::formation, spec_.formation_terms, covariates, n, directed),
      dissolution_(Phase::dissolution, spec_.dissolution_terms, covariates, n, directed) {}

TransitionDecomposition simulate_transition(const Network& prev, const StergmModel& model,
                                            const SamplerConfig& cfg, std::size_t t) {
  SamplerConfig one = cfg;
  one.n_draws = 1;
  TransitionDecomposition d;
  for (Phase p : {Phase::formation, Phase::dissolution}) {
    const PhaseSpace space(p, prev);
    ChainOptions opts;
    opts.stream = StreamId{stream::kSimulate, static_cast<std::uint64_t>(p), t};
    PhaseDraws draws = sample_phase(space, model.statistics(p), model.eta(p), one, opts);
    (p == Phase::formation ? d.formation : d.dissolution) = std::move(draws.last);
  }
  return d;
}

Network simulate_step(const Network& prev, const StergmModel& model, const SamplerConfig& cfg,
                      std::size_t t) {
  return apply_transition(prev, simulate_transition(prev, model, cfg, t));
}

NetworkSeries simulate_series(const Network& y0, const StergmModel& model, std::size_t steps,
                              const SamplerConfig& cfg, const Covariates& covariates) {
  if (steps < 1) throw InputError("simulate_series needs at least one step");
  NetworkSeries series;
  series.covariates = covariates;
  series.networks.reserve(steps + 1);
  series.networks.push_back(y0);
  for (std::size_t t = 1; t <= steps; ++t) {
    series.networks.push_back(simulate_step(series.networks.back(), model, cfg, t));
  }
  return series;
}

}  // namespace stergm
