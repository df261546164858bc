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

#include <algorithm>
#include <cmath>
#include <sstream>

#include "mcmc_sample.hpp"
#include "stergm/error.hpp"
#include "stergm/estimation.hpp"

namespace stergm {

namespace {

constexpr double kRangeTolerance = 1e-9;
constexpr std::size_t kDegenerateStreak = 3;

// Log-likelihood ratio surrogate l(θ⁰ + δ) - l(θ⁰) built from draws at θ⁰:
// δ·z_obs - Σ_t log mean_s exp(δ_t · g_ts).
class Surrogate {
 public:
  Surrogate(const PhaseData& data, const detail::PhaseSample& sample, Eigen::VectorXd observed)
      : data_(data), sample_(sample), observed_(std::move(observed)) {}

  struct Value {
    double value = 0.0;
    double min_ess = 1.0;  // smallest ESS / draws over transitions
    Eigen::VectorXd score;
    Eigen::MatrixXd information;
    std::vector<std::vector<double>> weights;
  };

  Value at(const Eigen::VectorXd& delta, bool derivatives) const {
    Value v;
    const auto q = static_cast<Eigen::Index>(data_.coefficients());
    v.value = delta.dot(observed_);
    if (derivatives) {
      v.score = observed_;
      v.information = Eigen::MatrixXd::Zero(q, q);
    }
    for (std::size_t t = 0; t < data_.transitions(); ++t) {
      const Eigen::VectorXd eta = data_.layout.eta(t, delta);
      const auto a = sample_.g[t].project(std::span<const double>(eta.data(), static_cast<std::size_t>(eta.size())));
      v.value -= detail::log_mean_exp(a);
      auto w = detail::normalized_weights(a);
      double sq = 0.0;
      for (double x : w) sq += x * x;
      v.min_ess = std::min(v.min_ess, 1.0 / (sq * static_cast<double>(w.size())));
      if (derivatives) {
        Eigen::VectorXd mean;
        Eigen::MatrixXd cov;
        detail::weighted_moments(sample_.g[t], w, mean, cov);
        data_.layout.accumulate(t, Eigen::VectorXd(-mean), v.score);
        data_.layout.accumulate(t, cov, v.information);
      }
      v.weights.push_back(std::move(w));
    }
    return v;
  }

 private:
  const PhaseData& data_;
  const detail::PhaseSample& sample_;
  Eigen::VectorXd observed_;
};

Eigen::VectorXd Solve(const Eigen::MatrixXd& information, const Eigen::VectorXd& score) {
  Eigen::MatrixXd h = information;
  const double scale = std::max(1.0, h.diagonal().cwiseAbs().maxCoeff());
  h.diagonal().array() += 1e-9 * scale;
  return h.ldlt().solve(score);
}

struct Step {
  Eigen::VectorXd delta;
  double min_ess = 1.0;
  bool truncated = false;
};

// Maximizes the surrogate, then pulls the step back along its ray until the
// importance weights keep enough effective draws and no coefficient moves
// more than max_step.
Step MaximizeSurrogate(const Surrogate& s, std::size_t q, const FitConfig& cfg) {
  Eigen::VectorXd delta = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(q));
  auto current = s.at(delta, true);
  const double runaway = 25.0 * cfg.max_step;
  bool ran_away = false;
  for (int it = 0; it < 100; ++it) {
    const Eigen::VectorXd dir = Solve(current.information, current.score);
    double alpha = 1.0;
    Eigen::VectorXd next = delta + dir;
    double value = s.at(next, false).value;
    while (!(value >= current.value) && alpha > 1e-10) {
      alpha *= 0.5;
      next = delta + alpha * dir;
      value = s.at(next, false).value;
    }
    if (!(value >= current.value)) break;
    const double moved = (alpha * dir).cwiseAbs().maxCoeff();
    delta = next;
    current = s.at(delta, true);
    if (delta.cwiseAbs().maxCoeff() > runaway) {
      ran_away = true;
      break;
    }
    if (moved < 1e-9) break;
  }
  Step step;
  auto ok = [&](double f) {
    const Eigen::VectorXd d = f * delta;
    if (d.cwiseAbs().maxCoeff() > cfg.max_step * (1 + 1e-12)) return false;
    return s.at(d, false).min_ess >= cfg.min_ess_fraction;
  };
  if (!ran_away && ok(1.0)) {
    step.delta = delta;
  } else {
    double lo = 0.0;
    double hi = 1.0;
    for (int it = 0; it < 40; ++it) {
      const double mid = 0.5 * (lo + hi);
      (ok(mid) ? lo : hi) = mid;
    }
    step.delta = lo * delta;
    step.truncated = true;
  }
  step.min_ess = s.at(step.delta, false).min_ess;
  return step;
}

// Summed statistic draws Σ_t A_tᵀ g_t, row by row.
Eigen::MatrixXd SummedDraws(const PhaseData& data, const detail::PhaseSample& sample) {
  const std::size_t S = sample.draws();
  Eigen::MatrixXd z = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(S), static_cast<Eigen::Index>(data.coefficients()));
  for (std::size_t t = 0; t < data.transitions(); ++t) {
    const auto& idx = data.layout.index[t];
    for (std::size_t k = 0; k < idx.size(); ++k) {
      const auto col = sample.g[t].column(k);
      for (std::size_t r = 0; r < S; ++r) z(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(idx[k])) += col[r];
    }
  }
  return z;
}

SampleMatrix ToSampleMatrix(const Eigen::MatrixXd& z) {
  SampleMatrix m(static_cast<std::size_t>(z.rows()), static_cast<std::size_t>(z.cols()));
  for (Eigen::Index c = 0; c < z.cols(); ++c) {
    for (Eigen::Index r = 0; r < z.rows(); ++r) m.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = z(r, c);
  }
  return m;
}

std::string Describe(const std::vector<std::string>& labels, const Eigen::VectorXd& v) {
  std::ostringstream os;
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    if (k) os << ", ";
    os << labels[static_cast<std::size_t>(k)] << "=" << v[k];
  }
  return os.str();
}

}  // namespace

void FitConfig::validate() const {
  sampler.validate();
  if (sample_size < 2) throw InputError("sample size must be at least 2");
  if (chains < 1) throw InputError("need at least one chain");
  if (batches < 1) throw InputError("need at least one batch per chain");
  if (max_iterations < 1) throw InputError("max iterations must be at least 1");
  if (!(step_tolerance > 0)) throw InputError("step tolerance must be positive");
  if (!(mahalanobis_tolerance >= 0)) throw InputError("mahalanobis tolerance must be non-negative");
  if (!(min_ess_fraction > 0 && min_ess_fraction < 1)) throw InputError("ESS fraction must lie in (0, 1)");
  if (!(max_step > 0)) throw InputError("max step must be positive");
  if (bridge_points < 1) throw InputError("need at least one bridge point");
  if (bridge_sample_size < 2) throw InputError("bridge sample size must be at least 2");
}

Eigen::VectorXd PhaseFit::p_values() const {
  Eigen::VectorXd p(theta.size());
  for (Eigen::Index k = 0; k < theta.size(); ++k) {
    const double z = std::abs(theta[k] / std_error[k]);
    p[k] = std::isfinite(z) ? std::erfc(z / std::sqrt(2.0)) : (theta[k] == 0 ? 1.0 : 0.0);
  }
  return p;
}

InformationEstimate standard_errors(const PhaseData& data, const Eigen::VectorXd& theta,
                                    const FitConfig& cfg, std::uint64_t tag) {
  const detail::PhaseSample sample =
      detail::draw(data, theta, cfg, cfg.sample_size,
                   StreamId{stream::kFinal, static_cast<std::uint64_t>(data.phase), tag});
  const Eigen::MatrixXd z = SummedDraws(data, sample);
  InformationEstimate est;
  est.expected = z.colwise().mean().transpose();
  const Eigen::MatrixXd centered = z.rowwise() - est.expected.transpose();
  est.information = centered.transpose() * centered / static_cast<double>(z.rows());
  const Eigen::MatrixXd var_mean =
      detail::mean_covariance(ToSampleMatrix(z), {}, sample.chains, sample.per_chain, cfg.batches);
  est.mean_se = var_mean.diagonal().cwiseMax(0.0).cwiseSqrt();

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(est.information);
  const double top = eig.eigenvalues().cwiseAbs().maxCoeff();
  if (!(top > 0) || eig.eigenvalues().minCoeff() <= 1e-10 * top) {
    const Eigen::VectorXd null_dir = eig.eigenvectors().col(0);
    throw SingularInformation(std::string(to_string(data.phase)) +
                              ": information matrix is singular; statistics are collinear or constant "
                              "along direction [" + Describe(data.layout.labels, null_dir) + "]");
  }
  est.covariance = eig.eigenvectors() * eig.eigenvalues().cwiseInverse().asDiagonal() *
                   eig.eigenvectors().transpose();
  return est;
}

PhaseFit fit_phase(const PhaseData& data, const FitConfig& cfg, std::uint64_t tag) {
  cfg.validate();
  PhaseFit fit;
  fit.phase = data.phase;
  fit.labels = data.layout.labels;
  fit.free_dyads = data.free_dyads();
  fit.null_loglik = data.null_loglik();
  fit.loglik = fit.null_loglik;
  fit.observed = data.observed_total();
  const std::size_t q = data.coefficients();
  if (q == 0) {
    fit.converged = true;
    return fit;
  }

  Eigen::VectorXd theta = mple(data);
  std::vector<std::size_t> boundary_streak(q, 0);
  bool converged = false;
  Eigen::MatrixXd last_fit_var;  // variance of the matched weighted mean at convergence
  Eigen::MatrixXd last_info;
  const StreamId fit_stream{stream::kFit, static_cast<std::uint64_t>(data.phase), tag};

  for (std::size_t iter = 1; iter <= cfg.max_iterations && !converged; ++iter) {
    const detail::PhaseSample sample = detail::draw(data, theta, cfg, cfg.sample_size, fit_stream.child(iter));
    const Eigen::MatrixXd z = SummedDraws(data, sample);

    // An observed statistic stuck at the edge of what the model produces
    // means the likelihood keeps rising toward infinite coefficients.
    for (std::size_t k = 0; k < q; ++k) {
      const auto col = z.col(static_cast<Eigen::Index>(k));
      const double lo = col.minCoeff();
      const double hi = col.maxCoeff();
      const double obs = fit.observed[static_cast<Eigen::Index>(k)];
      const double tol = kRangeTolerance * std::max(1.0, std::abs(obs));
      const bool at_edge = obs <= lo + tol || obs >= hi - tol;
      boundary_streak[k] = at_edge ? boundary_streak[k] + 1 : 0;
      const bool constant = hi - lo <= tol && std::abs(obs - lo) <= tol;
      if (constant || boundary_streak[k] >= kDegenerateStreak) {
        std::ostringstream os;
        os << to_string(data.phase) << " statistic '" << fit.labels[k] << "' (observed " << obs
           << ") sits at the edge of the simulated range [" << lo << ", " << hi << "] at theta = ["
           << Describe(fit.labels, theta) << "]; its maximum likelihood estimate does not exist";
        throw DegenerateStatistic(os.str());
      }
    }

    const Surrogate surrogate(data, sample, fit.observed);
    const Step step = MaximizeSurrogate(surrogate, q, cfg);
    const auto at_step = surrogate.at(step.delta, true);
    const Eigen::MatrixXd info0 = surrogate.at(Eigen::VectorXd::Zero(static_cast<Eigen::Index>(q)), true).information;

    IterationTrace trace;
    trace.theta = theta;
    trace.step = step.delta;
    trace.min_ess_fraction = step.min_ess;
    trace.truncated = step.truncated;
    fit.trace.push_back(trace);

    const double max_move = step.delta.cwiseAbs().maxCoeff();
    const double mahalanobis = std::sqrt(std::max(0.0, step.delta.dot(info0 * step.delta)));
    converged = !step.truncated && (max_move < cfg.step_tolerance || mahalanobis < cfg.mahalanobis_tolerance);
    theta += step.delta;
    fit.iterations = iter;
    if (cfg.progress) {
      std::ostringstream os;
      os << to_string(data.phase) << " iteration " << iter << ": max step " << max_move
         << ", step/SE " << mahalanobis << ", min ESS " << step.min_ess << (step.truncated ? " (truncated)" : "");
      cfg.progress(os.str());
    }
    if (converged) {
      // Monte Carlo error of the weighted mean matched to the observation.
      // Transitions carry their own weights and independent chains.
      Eigen::MatrixXd var = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(q), static_cast<Eigen::Index>(q));
      for (std::size_t t = 0; t < data.transitions(); ++t) {
        const Eigen::MatrixXd vt = detail::mean_covariance(sample.g[t], at_step.weights[t], sample.chains,
                                                           sample.per_chain, cfg.batches);
        data.layout.accumulate(t, vt, var);
      }
      last_fit_var = var;
      last_info = at_step.information;
    }
  }
  if (!converged) {
    std::ostringstream os;
    os << to_string(data.phase) << ": no convergence after " << cfg.max_iterations
       << " iterations; last theta = [" << Describe(fit.labels, theta) << "]";
    if (!fit.trace.empty()) {
      os << ", last step = [" << Describe(fit.labels, fit.trace.back().step) << "], min ESS "
         << fit.trace.back().min_ess_fraction;
    }
    throw NonConvergence(os.str());
  }

  fit.theta = theta;
  fit.converged = true;
  const InformationEstimate est = standard_errors(data, theta, cfg, tag);
  fit.covariance = est.covariance;
  fit.expected = est.expected;
  // Propagate the Monte Carlo error of the matched mean through the inverse information.
  Eigen::LDLT<Eigen::MatrixXd> ldlt(last_info);
  Eigen::MatrixXd inv_info = est.covariance;
  if (ldlt.info() == Eigen::Success && ldlt.isPositive()) {
    inv_info = ldlt.solve(Eigen::MatrixXd::Identity(last_info.rows(), last_info.cols()));
  }
  const Eigen::MatrixXd mc = inv_info * last_fit_var * inv_info;
  fit.mcmc_se = mc.diagonal().cwiseMax(0.0).cwiseSqrt();
  fit.std_error = (fit.covariance.diagonal() + fit.mcmc_se.cwiseAbs2()).cwiseSqrt();
  fit.moment_se = (last_fit_var.diagonal() + est.mean_se.cwiseAbs2()).cwiseMax(0.0).cwiseSqrt();
  // Effective draws per transition, from the variance of the mean.
  fit.mean_ess.resize(static_cast<Eigen::Index>(q));
  for (Eigen::Index k = 0; k < fit.mean_ess.size(); ++k) {
    const double v = est.mean_se[k] * est.mean_se[k];
    fit.mean_ess[k] = v > 0 ? est.information(k, k) / v : static_cast<double>(cfg.sample_size);
  }
  return fit;
}

}  // namespace stergm
