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

#include "mcmc_sample.hpp"

#include <algorithm>
#include <cmath>

#include "stergm/kernels.hpp"
#include "stergm/parallel.hpp"
#include "stergm/sampler.hpp"

namespace stergm::detail {

PhaseSample draw(const PhaseData& data, const Eigen::VectorXd& theta, const FitConfig& cfg,
                 std::size_t draws, const StreamId& stream) {
  PhaseSample out;
  out.chains = std::max<std::size_t>(1, std::min(cfg.chains, draws));
  out.per_chain = (draws + out.chains - 1) / out.chains;
  const std::size_t T = data.transitions();
  std::vector<SampleMatrix> parts(T * out.chains);
  SamplerConfig sc = cfg.sampler;
  sc.n_draws = out.per_chain;
  parallel_for(parts.size(), resolve_threads(cfg.threads), [&](std::size_t task) {
    const std::size_t t = task / out.chains;
    const std::size_t c = task % out.chains;
    const Eigen::VectorXd eta = data.layout.eta(t, theta);
    const PhaseSpace space(data.phase, data.anchors[t]);
    ChainOptions opts;
    opts.start = &data.observed[t];
    opts.stream = stream.child(t).child(c);
    parts[task] = sample_phase(space, data.stats,
                               std::span<const double>(eta.data(), static_cast<std::size_t>(eta.size())), sc, opts)
                      .stats;
  });
  out.g.reserve(T);
  for (std::size_t t = 0; t < T; ++t) {
    out.g.push_back(SampleMatrix::concat(std::span<const SampleMatrix>(parts.data() + t * out.chains, out.chains)));
  }
  return out;
}

double log_mean_exp(std::span<const double> a) {
  const double m = *std::max_element(a.begin(), a.end());
  double s = 0.0;
  for (double x : a) s += std::exp(x - m);
  return m + std::log(s / static_cast<double>(a.size()));
}

std::vector<double> normalized_weights(std::span<const double> a) {
  const double m = *std::max_element(a.begin(), a.end());
  std::vector<double> w(a.size());
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    w[i] = std::exp(a[i] - m);
    s += w[i];
  }
  for (double& x : w) x /= s;
  return w;
}

void weighted_moments(const SampleMatrix& g, std::span<const double> w, Eigen::VectorXd& mean,
                      Eigen::MatrixXd& cov) {
  const auto& k = kernels::active();
  const std::size_t p = g.cols();
  const std::size_t n = g.rows();
  mean.resize(static_cast<Eigen::Index>(p));
  cov.resize(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(p));
  std::vector<std::vector<double>> centered(p, std::vector<double>(n));
  std::vector<std::vector<double>> weighted(p, std::vector<double>(n));
  for (std::size_t c = 0; c < p; ++c) {
    const auto col = g.column(c);
    const double m = k.dot(col.data(), w.data(), n);
    mean[static_cast<Eigen::Index>(c)] = m;
    for (std::size_t r = 0; r < n; ++r) {
      centered[c][r] = col[r] - m;
      weighted[c][r] = w[r] * centered[c][r];
    }
  }
  for (std::size_t a = 0; a < p; ++a) {
    for (std::size_t b = a; b < p; ++b) {
      const double v = k.dot(weighted[a].data(), centered[b].data(), n);
      cov(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = v;
      cov(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(a)) = v;
    }
  }
}

Eigen::MatrixXd mean_covariance(const SampleMatrix& g, std::span<const double> w, std::size_t chains,
                                std::size_t per_chain, std::size_t batches) {
  const std::size_t p = g.cols();
  const std::size_t per_batch_chain = std::max<std::size_t>(1, std::min(batches, per_chain));
  const std::size_t len = per_chain / per_batch_chain;
  std::vector<Eigen::VectorXd> means;
  std::vector<double> weights;
  for (std::size_t c = 0; c < chains; ++c) {
    for (std::size_t b = 0; b < per_batch_chain; ++b) {
      const std::size_t first = c * per_chain + b * len;
      const std::size_t last = b + 1 == per_batch_chain ? (c + 1) * per_chain : first + len;
      Eigen::VectorXd m = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(p));
      double W = 0.0;
      for (std::size_t r = first; r < last; ++r) {
        const double wr = w.empty() ? 1.0 : w[r];
        W += wr;
        for (std::size_t k = 0; k < p; ++k) m[static_cast<Eigen::Index>(k)] += wr * g.at(r, k);
      }
      if (W > 0.0) m /= W;
      means.push_back(std::move(m));
      weights.push_back(W);
    }
  }
  const std::size_t B = means.size();
  Eigen::MatrixXd cov = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(p));
  if (B < 2) return cov;
  double total = 0.0;
  Eigen::VectorXd overall = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(p));
  for (std::size_t b = 0; b < B; ++b) {
    total += weights[b];
    overall += weights[b] * means[b];
  }
  overall /= total;
  for (std::size_t b = 0; b < B; ++b) {
    const Eigen::VectorXd d = means[b] - overall;
    cov += (weights[b] * weights[b]) * d * d.transpose();
  }
  return cov * (static_cast<double>(B) / (static_cast<double>(B - 1) * total * total));
}

}  // namespace stergm::detail
