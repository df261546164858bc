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

// Brute-force enumeration over small phase spaces. Used as the reference for
// the MCMC machinery; every state is scored with a full statistic
// evaluation, never with change scores.

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "stergm/phase_data.hpp"
#include "stergm/sampler.hpp"
#include "stergm/series_io.hpp"
#include "stergm/simulate.hpp"

namespace stergm {

inline constexpr std::size_t kMaxEnumerableDyads = 20;

/// Exact distribution of one phase at natural parameter eta.
struct ExactPhase {
  double log_normalizer = 0.0;  // log Σ_y exp(eta · g(y))
  Eigen::VectorXd mean;
  Eigen::MatrixXd covariance;
  /// Per state code (see state_code), filled when requested.
  std::vector<double> probabilities;
};

/// Bit f of the code is set when free dyad f (PhaseSpace order) is tied in y.
std::uint64_t state_code(const PhaseSpace& space, const Network& y);

/// Throws InputError when the space has more than kMaxEnumerableDyads free dyads.
ExactPhase exact_phase(const PhaseSpace& space, const PhaseStatistics& stats,
                       std::span<const double> eta, bool keep_probabilities = false);

/// Log-likelihood l(theta) = Σ_t [eta_t · g(y_obs,t) - log c_t(eta_t)] of one phase.
double exact_phase_loglik(const PhaseData& data, const Eigen::VectorXd& theta);
/// Score Σ_t A_tᵀ (g_obs,t - E g_t) and observed information Σ_t A_tᵀ Cov_t A_t.
void exact_phase_derivatives(const PhaseData& data, const Eigen::VectorXd& theta,
                             Eigen::VectorXd& score, Eigen::MatrixXd& information);

/// Conditional log-likelihood of a whole series under the model's
/// coefficients: the formation and dissolution parts added.
double exact_loglik(const NetworkSeries& series, const ModelSpec& model);

/// log P(next | prev) as the product of the two phase probabilities.
double exact_transition_log_probability(const Network& prev, const Network& next,
                                        const StergmModel& model);

/// log P(next | prev) computed from the joint form over all networks,
/// exp(θ⁺·g⁺(y ∪ prev) + θ⁻·g⁻(y ∩ prev)) normalized over every y on the same
/// node set. Limited to kMaxEnumerableDyads dyads in total.
double exact_joint_log_probability(const Network& prev, const Network& next,
                                   const StergmModel& model);

}  // namespace stergm
