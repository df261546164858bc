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

#include "stergm/phase_data.hpp"

#include <cmath>
#include <numbers>

#include "stergm/error.hpp"
#include "stergm/sampler.hpp"

namespace stergm {

std::string_view to_string(Heterogeneity h) {
  switch (h) {
    case Heterogeneity::none: return "none";
    case Heterogeneity::edges: return "edges";
    case Heterogeneity::full: return "full";
  }
  return "none";
}

Heterogeneity parse_heterogeneity(std::string_view text) {
  if (text == "none") return Heterogeneity::none;
  if (text == "edges") return Heterogeneity::edges;
  if (text == "full") return Heterogeneity::full;
  throw InputError("unknown heterogeneity scheme '" + std::string(text) +
                   "' (expected none, edges or full)");
}

CoefficientLayout CoefficientLayout::build(std::span<const TermSpec> terms, std::size_t transitions,
                                           Heterogeneity scheme) {
  CoefficientLayout layout;
  layout.index.assign(transitions, std::vector<std::size_t>(terms.size()));
  auto varies = [&](const TermSpec& term) {
    if (scheme == Heterogeneity::full) return true;
    return scheme == Heterogeneity::edges && term.kind == TermKind::edges;
  };
  if (scheme == Heterogeneity::edges) {
    bool has_edges = false;
    for (const auto& term : terms) has_edges = has_edges || term.kind == TermKind::edges;
    if (!has_edges && !terms.empty()) {
      throw InputError("edges heterogeneity needs an edges term in every phase that has terms");
    }
  }
  // Shared coefficients first, in term order, then per-transition ones.
  for (std::size_t k = 0; k < terms.size(); ++k) {
    if (varies(terms[k])) continue;
    for (std::size_t t = 0; t < transitions; ++t) layout.index[t][k] = layout.count;
    layout.labels.push_back(terms[k].label());
    ++layout.count;
  }
  for (std::size_t k = 0; k < terms.size(); ++k) {
    if (!varies(terms[k])) continue;
    for (std::size_t t = 0; t < transitions; ++t) {
      layout.index[t][k] = layout.count;
      layout.labels.push_back(terms[k].label() + "@" + std::to_string(t + 1));
      ++layout.count;
    }
  }
  return layout;
}

Eigen::VectorXd CoefficientLayout::eta(std::size_t t, const Eigen::VectorXd& theta) const {
  const auto& idx = index.at(t);
  Eigen::VectorXd out(static_cast<Eigen::Index>(idx.size()));
  for (std::size_t k = 0; k < idx.size(); ++k) out[static_cast<Eigen::Index>(k)] = theta[static_cast<Eigen::Index>(idx[k])];
  return out;
}

void CoefficientLayout::accumulate(std::size_t t, const Eigen::VectorXd& g, Eigen::VectorXd& out) const {
  const auto& idx = index.at(t);
  for (std::size_t k = 0; k < idx.size(); ++k) {
    out[static_cast<Eigen::Index>(idx[k])] += g[static_cast<Eigen::Index>(k)];
  }
}

void CoefficientLayout::accumulate(std::size_t t, const Eigen::MatrixXd& c, Eigen::MatrixXd& out) const {
  const auto& idx = index.at(t);
  for (std::size_t a = 0; a < idx.size(); ++a) {
    for (std::size_t b = 0; b < idx.size(); ++b) {
      out(static_cast<Eigen::Index>(idx[a]), static_cast<Eigen::Index>(idx[b])) +=
          c(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b));
    }
  }
}

PhaseData PhaseData::from_pairs(Phase phase, PhaseStatistics stats, std::vector<Network> anchors,
                                std::vector<Network> observed, Heterogeneity scheme) {
  if (anchors.size() != observed.size() || anchors.empty()) {
    throw InputError("phase data needs one observed network per anchor");
  }
  PhaseData data;
  data.phase = phase;
  data.stats = std::move(stats);
  for (std::size_t t = 0; t < anchors.size(); ++t) {
    const PhaseSpace space(phase, anchors[t]);
    if (!space.contains(observed[t])) {
      throw InputError(std::string(to_string(phase)) + " network at transition " +
                       std::to_string(t + 1) + " is not reachable from its anchor");
    }
    const auto g = data.stats.evaluate(observed[t], anchors[t]);
    data.observed_stats.push_back(Eigen::Map<const Eigen::VectorXd>(g.data(), static_cast<Eigen::Index>(g.size())));
  }
  data.anchors = std::move(anchors);
  data.observed = std::move(observed);
  data.layout = CoefficientLayout::build(data.stats.terms(), data.anchors.size(), scheme);
  return data;
}

PhaseData PhaseData::from_series(const NetworkSeries& series, const ModelSpec& model, Phase phase,
                                 Heterogeneity scheme) {
  series.validate();
  const ModelSpec spec = expand_model(model, series.covariates);
  PhaseStatistics stats(phase, spec.terms(phase), series.covariates, series.size(), series.directed());
  std::vector<Network> anchors;
  std::vector<Network> observed;
  for (std::size_t t = 1; t < series.networks.size(); ++t) {
    const auto d = decompose_transition(series.networks[t - 1], series.networks[t]);
    anchors.push_back(series.networks[t - 1]);
    observed.push_back(phase == Phase::formation ? d.formation : d.dissolution);
  }
  return from_pairs(phase, std::move(stats), std::move(anchors), std::move(observed), scheme);
}

std::size_t PhaseData::free_dyads() const {
  std::size_t total = 0;
  for (const auto& a : anchors) {
    total += phase == Phase::formation ? a.dyad_count() - a.edge_count() : a.edge_count();
  }
  return total;
}

Eigen::VectorXd PhaseData::observed_total() const {
  Eigen::VectorXd out = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(layout.count));
  for (std::size_t t = 0; t < transitions(); ++t) layout.accumulate(t, observed_stats[t], out);
  return out;
}

double PhaseData::null_loglik() const {
  return -static_cast<double>(free_dyads()) * std::numbers::ln2;
}

}  // namespace stergm
