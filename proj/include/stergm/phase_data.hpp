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

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "stergm/phase_statistics.hpp"
#include "stergm/series_io.hpp"
#include "stergm/terms.hpp"

namespace stergm {

/// How coefficients vary across transitions.
enum class Heterogeneity {
  none,   // one coefficient per term
  edges,  // one edges coefficient per transition, other terms shared
  full,   // every term has its own coefficient at each transition
};

std::string_view to_string(Heterogeneity h);
Heterogeneity parse_heterogeneity(std::string_view text);

/// Maps the fitted coefficient vector theta onto the natural parameters of
/// each transition: eta_t[k] = theta[index[t][k]].
struct CoefficientLayout {
  std::size_t count = 0;
  std::vector<std::string> labels;
  std::vector<std::vector<std::size_t>> index;

  static CoefficientLayout build(std::span<const TermSpec> terms, std::size_t transitions,
                                 Heterogeneity scheme);

  Eigen::VectorXd eta(std::size_t t, const Eigen::VectorXd& theta) const;
  /// theta-space accumulation: out += A_tᵀ g.
  void accumulate(std::size_t t, const Eigen::VectorXd& g, Eigen::VectorXd& out) const;
  /// out += A_tᵀ C A_t.
  void accumulate(std::size_t t, const Eigen::MatrixXd& c, Eigen::MatrixXd& out) const;
};

/// Everything one phase's likelihood needs: the anchors y^{t-1}, the
/// observed phase networks (y⁺ = y^{t-1} ∪ y^t or y⁻ = y^{t-1} ∩ y^t), their
/// statistics, and the coefficient layout.
struct PhaseData {
  Phase phase = Phase::formation;
  PhaseStatistics stats;
  std::vector<Network> anchors;
  std::vector<Network> observed;
  std::vector<Eigen::VectorXd> observed_stats;
  CoefficientLayout layout;

  static PhaseData from_series(const NetworkSeries& series, const ModelSpec& model, Phase phase,
                               Heterogeneity scheme = Heterogeneity::none);

  /// Same statistics for explicit (anchor, observed phase network) pairs.
  static PhaseData from_pairs(Phase phase, PhaseStatistics stats, std::vector<Network> anchors,
                              std::vector<Network> observed, Heterogeneity scheme = Heterogeneity::none);

  std::size_t transitions() const { return anchors.size(); }
  std::size_t coefficients() const { return layout.count; }
  /// Free dyads summed over transitions.
  std::size_t free_dyads() const;
  /// Σ_t A_tᵀ g_obs,t.
  Eigen::VectorXd observed_total() const;
  /// Log-likelihood of the all-zero coefficient vector: -free_dyads · log 2.
  double null_loglik() const;
};

}  // namespace stergm
