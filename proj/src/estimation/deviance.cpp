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

#include <optional>

#include <boost/math/distributions/chi_squared.hpp>

#include "stergm/error.hpp"
#include "stergm/estimation.hpp"

namespace stergm {

namespace {

DevianceRow NullRow(const PhaseData& data) {
  DevianceRow row;
  row.label = "Null";
  row.phase = data.phase;
  row.is_null = true;
  row.residual_deviance = -2.0 * data.null_loglik();
  row.residual_df = data.free_dyads();
  row.aic = aic(row.residual_deviance, 0);
  return row;
}

DevianceRow NextRow(const DevianceRow& prev, std::string label, Phase phase, double log_ratio,
                    std::size_t parameters, std::size_t prev_parameters, std::size_t free_dyads) {
  if (parameters > free_dyads) {
    throw InputError(std::string(to_string(phase)) + ": " + std::to_string(parameters) +
                     " coefficients exceed the " + std::to_string(free_dyads) + " free dyads");
  }
  DevianceRow row;
  row.label = std::move(label);
  row.phase = phase;
  row.explained_deviance = 2.0 * log_ratio;
  row.explained_df = parameters - prev_parameters;
  row.residual_deviance = prev.residual_deviance - row.explained_deviance;
  row.residual_df = free_dyads - parameters;
  row.aic = aic(row.residual_deviance, parameters);
  return row;
}

ModelSpec Checked(const NetworkSeries& series, const ModelSpec& model) {
  model.validate();
  series.validate();
  return expand_model(model, series.covariates);
}

std::uint64_t SchemeTag(Heterogeneity h) { return static_cast<std::uint64_t>(h) + 1; }

// Coefficients of a smaller nested model placed into a larger layout; terms
// absent from the smaller model get zero.
Eigen::VectorXd Embed(const PhaseData& small, const Eigen::VectorXd& theta, const PhaseData& big) {
  Eigen::VectorXd out = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(big.coefficients()));
  const auto& big_terms = big.stats.terms();
  const auto& small_terms = small.stats.terms();
  for (std::size_t t = 0; t < big.transitions(); ++t) {
    for (std::size_t k = 0; k < big_terms.size(); ++k) {
      for (std::size_t j = 0; j < small_terms.size(); ++j) {
        if (small_terms[j].label() == big_terms[k].label()) {
          out[static_cast<Eigen::Index>(big.layout.index[t][k])] =
              theta[static_cast<Eigen::Index>(small.layout.index[t][j])];
        }
      }
    }
  }
  return out;
}

}  // namespace

double aic(double residual_deviance, std::size_t parameters) {
  return residual_deviance + 2.0 * static_cast<double>(parameters);
}

double DevianceRow::p_value() const {
  if (is_null || explained_df == 0) return 1.0;
  if (!(explained_deviance > 0)) return 1.0;
  const boost::math::chi_squared dist(static_cast<double>(explained_df));
  return boost::math::cdf(boost::math::complement(dist, explained_deviance));
}

FitResult fit_time_heterogeneous(const NetworkSeries& series, const ModelSpec& model,
                                 const FitConfig& cfg, Heterogeneity scheme) {
  cfg.validate();
  const ModelSpec spec = Checked(series, model);
  FitResult result;
  result.scheme = scheme;
  result.seed = cfg.sampler.seed;
  for (Phase p : {Phase::formation, Phase::dissolution}) {
    const PhaseData data = PhaseData::from_series(series, spec, p, scheme);
    PhaseFit fit = fit_phase(data, cfg, SchemeTag(scheme));
    const DevianceRow null = NullRow(data);
    result.deviance_table.push_back(null);
    if (data.coefficients() > 0) {
      const double ratio = bridge_log_ratio(data, Eigen::VectorXd::Zero(fit.theta.size()), fit.theta, cfg,
                                            SchemeTag(scheme));
      fit.loglik = fit.null_loglik + ratio;
      result.deviance_table.push_back(
          NextRow(null, "Model", p, ratio, data.coefficients(), 0, data.free_dyads()));
    }
    result.phase(p) = std::move(fit);
  }
  return result;
}

FitResult cmle_fit(const NetworkSeries& series, const ModelSpec& model, const FitConfig& cfg) {
  return fit_time_heterogeneous(series, model, cfg, Heterogeneity::none);
}

std::vector<DevianceRow> bridge_deviance(const NetworkSeries& series, const ModelSpec& model,
                                         const FitConfig& cfg) {
  cfg.validate();
  const ModelSpec spec = Checked(series, model);
  std::vector<DevianceRow> rows;
  for (Phase p : {Phase::formation, Phase::dissolution}) {
    const PhaseData data = PhaseData::from_series(series, spec, p);
    const DevianceRow null = NullRow(data);
    rows.push_back(null);
    if (data.coefficients() == 0) continue;
    const auto& th = spec.theta(p);
    if (th.size() != data.coefficients()) {
      throw InputError(std::string(to_string(p)) + " coefficients missing or mis-sized");
    }
    const Eigen::VectorXd theta = Eigen::Map<const Eigen::VectorXd>(th.data(), static_cast<Eigen::Index>(th.size()));
    const double ratio = bridge_log_ratio(data, Eigen::VectorXd::Zero(theta.size()), theta, cfg, 0);
    rows.push_back(NextRow(null, "Model", p, ratio, data.coefficients(), 0, data.free_dyads()));
  }
  return rows;
}

FitResult analysis_of_deviance(const NetworkSeries& series, const ModelSpec& model, const FitConfig& cfg,
                               Heterogeneity scheme) {
  cfg.validate();
  const ModelSpec spec = Checked(series, model);
  FitResult result;
  result.scheme = scheme;
  result.seed = cfg.sampler.seed;
  const bool multi = series.transitions() >= 2;

  for (Phase p : {Phase::formation, Phase::dissolution}) {
    const auto& terms = spec.terms(p);
    bool has_edges = false;
    for (const auto& term : terms) has_edges = has_edges || term.kind == TermKind::edges;

    struct Step {
      std::string label;
      std::vector<TermSpec> terms;
      Heterogeneity scheme;
    };
    std::vector<Step> ladder;
    if (!terms.empty()) {
      if (has_edges && terms.size() > 1) ladder.push_back({"Edges (hom.)", {TermSpec::edges()}, Heterogeneity::none});
      ladder.push_back({"Full (hom.)", terms, Heterogeneity::none});
      if (multi && scheme != Heterogeneity::none && has_edges) {
        ladder.push_back({"Full (hom. except edges)", terms, Heterogeneity::edges});
      }
      if (multi && scheme == Heterogeneity::full) ladder.push_back({"Full (het.)", terms, Heterogeneity::full});
      if (scheme == Heterogeneity::edges && !has_edges) {
        throw InputError(std::string(to_string(p)) + " phase has no edges term to vary over time");
      }
    }

    ModelSpec empty = spec;
    empty.terms(p).clear();
    empty.theta(p).clear();
    const PhaseData null_data = PhaseData::from_series(series, empty, p);
    DevianceRow prev_row = NullRow(null_data);
    result.deviance_table.push_back(prev_row);
    PhaseFit fit = fit_phase(null_data, cfg, 0);

    std::optional<PhaseData> prev_data;
    Eigen::VectorXd prev_theta;
    double loglik = null_data.null_loglik();
    for (std::size_t m = 0; m < ladder.size(); ++m) {
      ModelSpec sub = spec;
      sub.terms(p) = ladder[m].terms;
      sub.theta(p).clear();
      PhaseData data = PhaseData::from_series(series, sub, p, ladder[m].scheme);
      if (prev_data && data.coefficients() == prev_data->coefficients()) continue;  // same model again
      const std::uint64_t tag = 16 + m;
      PhaseFit next = fit_phase(data, cfg, tag);
      const Eigen::VectorXd start = prev_data ? Embed(*prev_data, prev_theta, data)
                                              : Eigen::VectorXd::Zero(static_cast<Eigen::Index>(data.coefficients()));
      const double ratio = bridge_log_ratio(data, start, next.theta, cfg, tag);
      loglik += ratio;
      next.loglik = loglik;
      const DevianceRow row = NextRow(prev_row, ladder[m].label, p, ratio, data.coefficients(),
                                      prev_data ? prev_data->coefficients() : 0, data.free_dyads());
      result.deviance_table.push_back(row);
      prev_row = row;
      prev_theta = next.theta;
      prev_data = std::move(data);
      fit = std::move(next);
    }
    result.phase(p) = std::move(fit);
  }
  return result;
}

}  // namespace stergm
