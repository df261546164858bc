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
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "stergm/phase_data.hpp"
#include "stergm/sampler.hpp"
#include "stergm/series_io.hpp"
#include "stergm/terms.hpp"

namespace stergm {

struct FitConfig {
  /// Burn-in, interval, proposal, seed and degree cap for every chain. Its
  /// n_draws is not used; see sample_size.
  SamplerConfig sampler;
  /// Statistic draws per transition per iteration, split over the chains.
  std::size_t sample_size = 2000;
  std::size_t chains = 4;
  /// Batches per chain for the Monte Carlo error of sample means.
  std::size_t batches = 5;
  std::size_t max_iterations = 30;
  /// Converged when every coefficient moved less than this...
  double step_tolerance = 0.01;
  /// ...or the step is this small in the metric of the sampled information.
  double mahalanobis_tolerance = 0.25;
  /// Importance-weight effective sample size, as a fraction of the draws,
  /// that any step must keep at every transition.
  double min_ess_fraction = 0.2;
  /// Largest change of one coefficient in one iteration.
  double max_step = 2.0;
  std::size_t bridge_points = 16;
  /// Draws per transition at each bridge point.
  std::size_t bridge_sample_size = 1000;
  /// 0 means STERGM_THREADS or 1.
  unsigned threads = 0;
  /// Called after each iteration with a one-line progress message.
  std::function<void(const std::string&)> progress;

  void validate() const;
};

/// One iteration's record, kept for diagnostics.
struct IterationTrace {
  Eigen::VectorXd theta;  // where the sample was drawn
  Eigen::VectorXd step;
  double min_ess_fraction = 1.0;
  bool truncated = false;
};

struct PhaseFit {
  Phase phase = Phase::formation;
  std::vector<std::string> labels;
  Eigen::VectorXd theta;
  Eigen::VectorXd std_error;  // sqrt(inverse information + mcmc_se²)
  Eigen::VectorXd mcmc_se;    // Monte Carlo part of the error
  Eigen::MatrixXd covariance;  // inverse information at theta
  Eigen::VectorXd observed;    // Σ_t A_tᵀ g_obs,t
  Eigen::VectorXd expected;    // same under the fitted model, from a fresh sample
  Eigen::VectorXd moment_se;   // Monte Carlo error of observed - expected
  Eigen::VectorXd mean_ess;    // per coefficient, effective draws per transition
  double null_loglik = 0.0;
  double loglik = 0.0;  // bridged l(theta), null_loglik when there are no terms
  std::size_t free_dyads = 0;
  std::size_t iterations = 0;
  bool converged = false;
  std::vector<IterationTrace> trace;

  /// Two-sided normal p-values of theta / std_error.
  Eigen::VectorXd p_values() const;
};

struct DevianceRow {
  std::string label;
  Phase phase = Phase::formation;
  double residual_deviance = 0.0;
  std::size_t residual_df = 0;
  double explained_deviance = 0.0;  // relative to the row before; 0 for the null row
  std::size_t explained_df = 0;
  double aic = 0.0;
  bool is_null = false;

  /// Upper chi-square tail of the explained deviance; 1 for the null row.
  double p_value() const;
};

struct FitResult {
  PhaseFit formation;
  PhaseFit dissolution;
  Heterogeneity scheme = Heterogeneity::none;
  std::vector<DevianceRow> deviance_table;
  std::uint64_t seed = 0;

  const PhaseFit& phase(Phase p) const { return p == Phase::formation ? formation : dissolution; }
  PhaseFit& phase(Phase p) { return p == Phase::formation ? formation : dissolution; }
  double loglik() const { return formation.loglik + dissolution.loglik; }
};

/// Maximum pseudo-likelihood estimate: logistic regression of each free
/// dyad's state on its change statistics. Used to start the MCMC fit.
Eigen::VectorXd mple(const PhaseData& data);

/// MCMC maximum likelihood for one phase with the Geyer-Thompson
/// approximation of the normalizer ratio, restarted from each new estimate.
/// Throws DegenerateStatistic, NonConvergence or SingularInformation.
/// The bridged log-likelihood is not computed here.
PhaseFit fit_phase(const PhaseData& data, const FitConfig& cfg, std::uint64_t tag = 0);

/// Inverse information and Monte Carlo error at theta from a fresh sample.
struct InformationEstimate {
  Eigen::MatrixXd information;
  Eigen::MatrixXd covariance;
  Eigen::VectorXd expected;
  Eigen::VectorXd mean_se;  // Monte Carlo error of expected
};
InformationEstimate standard_errors(const PhaseData& data, const Eigen::VectorXd& theta,
                                    const FitConfig& cfg, std::uint64_t tag = 0);

/// l(to) - l(from) for one phase by bridge sampling along the segment.
double bridge_log_ratio(const PhaseData& data, const Eigen::VectorXd& from, const Eigen::VectorXd& to,
                        const FitConfig& cfg, std::uint64_t tag = 0);

/// Fits both phases with homogeneous coefficients. Phases are fitted
/// independently. The deviance table holds the null and fitted rows.
FitResult cmle_fit(const NetworkSeries& series, const ModelSpec& model, const FitConfig& cfg);

/// As cmle_fit with coefficients varying over transitions per `scheme`.
FitResult fit_time_heterogeneous(const NetworkSeries& series, const ModelSpec& model,
                                 const FitConfig& cfg, Heterogeneity scheme);

/// Null and model rows per phase for the coefficients carried by `model`
/// (homogeneous), each bridged from the zero vector.
std::vector<DevianceRow> bridge_deviance(const NetworkSeries& series, const ModelSpec& model,
                                         const FitConfig& cfg);

/// Fits the nested sequence Null, Edges (hom.), Full (hom.), then
/// Full (hom. except edges) and Full (het.) as far as `scheme` asks, bridging
/// consecutive fits. Returns the last fit with the full table attached.
FitResult analysis_of_deviance(const NetworkSeries& series, const ModelSpec& model,
                               const FitConfig& cfg, Heterogeneity scheme);

/// Residual deviance plus twice the parameter count.
double aic(double residual_deviance, std::size_t parameters);

}  // namespace stergm
