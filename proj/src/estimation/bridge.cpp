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

#include <vector>

#include "mcmc_sample.hpp"
#include "stergm/error.hpp"
#include "stergm/estimation.hpp"

namespace stergm {

// The segment from `from` to `to` is cut into bridge_points intervals. Draws
// at each interval midpoint estimate log c(upper end) - log c(lower end) by
// importance sampling in both directions, and the pieces add up to the
// normalizer ratio.
double bridge_log_ratio(const PhaseData& data, const Eigen::VectorXd& from, const Eigen::VectorXd& to,
                        const FitConfig& cfg, std::uint64_t tag) {
  const auto q = static_cast<Eigen::Index>(data.coefficients());
  if (from.size() != q || to.size() != q) throw InputError("bridge endpoints do not match the coefficient count");
  const Eigen::VectorXd delta = to - from;
  if (q == 0 || delta.isZero(0.0)) return 0.0;
  cfg.validate();
  const std::size_t K = cfg.bridge_points;
  const double half = 0.5 / static_cast<double>(K);
  const StreamId base{stream::kBridge, static_cast<std::uint64_t>(data.phase), tag};
  double log_ratio = 0.0;
  for (std::size_t k = 0; k < K; ++k) {
    const double mid = (static_cast<double>(k) + 0.5) / static_cast<double>(K);
    const detail::PhaseSample sample = detail::draw(data, from + mid * delta, cfg, cfg.bridge_sample_size, base.child(k));
    for (std::size_t t = 0; t < data.transitions(); ++t) {
      const Eigen::VectorXd v = data.layout.eta(t, delta);
      std::vector<double> a = sample.g[t].project(std::span<const double>(v.data(), static_cast<std::size_t>(v.size())));
      std::vector<double> up(a.size());
      std::vector<double> down(a.size());
      for (std::size_t s = 0; s < a.size(); ++s) {
        up[s] = half * a[s];
        down[s] = -half * a[s];
      }
      log_ratio += detail::log_mean_exp(up) - detail::log_mean_exp(down);
    }
  }
  return delta.dot(data.observed_total()) - log_ratio;
}

}  // namespace stergm
