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

#include "stergm/exact.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

#include "stergm/error.hpp"

namespace stergm {

namespace {

// Gray-code walk over every subset of `free`, starting from `base` (all bits clear).
template <typename Visit>
void Enumerate(Network base, const std::vector<Dyad>& free, Visit&& visit) {
  if (free.size() > kMaxEnumerableDyads) {
    throw InputError("exact enumeration limited to " + std::to_string(kMaxEnumerableDyads) +
                     " free dyads, got " + std::to_string(free.size()));
  }
  const std::uint64_t states = std::uint64_t{1} << free.size();
  std::uint64_t code = 0;
  visit(base, code);
  for (std::uint64_t i = 1; i < states; ++i) {
    const int f = std::countr_zero(i);
    base.toggle(free[static_cast<std::size_t>(f)]);
    code ^= std::uint64_t{1} << f;
    visit(base, code);
  }
}

double LogSumExp(const std::vector<double>& v) {
  const double m = *std::max_element(v.begin(), v.end());
  double s = 0.0;
  for (double x : v) s += std::exp(x - m);
  return m + std::log(s);
}

}  // namespace

std::uint64_t state_code(const PhaseSpace& space, const Network& y) {
  std::uint64_t code = 0;
  const auto& free = space.free_dyads();
  for (std::size_t f = 0; f < free.size() && f < 64; ++f) {
    if (y.has(free[f])) code |= std::uint64_t{1} << f;
  }
  return code;
}

ExactPhase exact_phase(const PhaseSpace& space, const PhaseStatistics& stats,
                       std::span<const double> eta, bool keep_probabilities) {
  const std::size_t p = stats.size();
  if (eta.size() != p) throw InputError("exact_phase: coefficient count does not match statistics");
  const auto& free = space.free_dyads();
  Network base = space.anchor();
  if (space.phase() == Phase::dissolution) {
    for (const Dyad& d : free) base.remove(d);
  }
  const std::size_t states = std::size_t{1} << std::min(free.size(), kMaxEnumerableDyads + 1);
  std::vector<double> logw(free.size() > kMaxEnumerableDyads ? 0 : states);
  Eigen::MatrixXd g(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(logw.size()));
  std::vector<double> buf(p);
  Enumerate(base, free, [&](const Network& y, std::uint64_t code) {
    stats.evaluate(y, space.anchor(), buf);
    double s = 0.0;
    for (std::size_t k = 0; k < p; ++k) {
      s += eta[k] * buf[k];
      g(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(code)) = buf[k];
    }
    logw[code] = s;
  });
  ExactPhase out;
  out.log_normalizer = LogSumExp(logw);
  Eigen::VectorXd w(static_cast<Eigen::Index>(logw.size()));
  for (std::size_t i = 0; i < logw.size(); ++i) {
    w[static_cast<Eigen::Index>(i)] = std::exp(logw[i] - out.log_normalizer);
  }
  out.mean = g * w;
  const Eigen::MatrixXd centered = g.colwise() - out.mean;
  out.covariance = centered * w.asDiagonal() * centered.transpose();
  if (keep_probabilities) out.probabilities.assign(w.data(), w.data() + w.size());
  return out;
}

double exact_phase_loglik(const PhaseData& data, const Eigen::VectorXd& theta) {
  double l = 0.0;
  for (std::size_t t = 0; t < data.transitions(); ++t) {
    const Eigen::VectorXd eta = data.layout.eta(t, theta);
    const ExactPhase ex = exact_phase(PhaseSpace(data.phase, data.anchors[t]), data.stats,
                                      std::span<const double>(eta.data(), static_cast<std::size_t>(eta.size())));
    l += eta.dot(data.observed_stats[t]) - ex.log_normalizer;
  }
  return l;
}

void exact_phase_derivatives(const PhaseData& data, const Eigen::VectorXd& theta,
                             Eigen::VectorXd& score, Eigen::MatrixXd& information) {
  const auto q = static_cast<Eigen::Index>(data.coefficients());
  score = Eigen::VectorXd::Zero(q);
  information = Eigen::MatrixXd::Zero(q, q);
  for (std::size_t t = 0; t < data.transitions(); ++t) {
    const Eigen::VectorXd eta = data.layout.eta(t, theta);
    const ExactPhase ex = exact_phase(PhaseSpace(data.phase, data.anchors[t]), data.stats,
                                      std::span<const double>(eta.data(), static_cast<std::size_t>(eta.size())));
    data.layout.accumulate(t, Eigen::VectorXd(data.observed_stats[t] - ex.mean), score);
    data.layout.accumulate(t, ex.covariance, information);
  }
}

double exact_loglik(const NetworkSeries& series, const ModelSpec& model) {
  const ModelSpec spec = expand_model(model, series.covariates);
  double l = 0.0;
  for (Phase p : {Phase::formation, Phase::dissolution}) {
    const PhaseData data = PhaseData::from_series(series, spec, p);
    if (data.coefficients() == 0) {
      l += data.null_loglik();
      continue;
    }
    const auto& th = spec.theta(p);
    if (th.size() != data.coefficients()) {
      throw InputError(std::string(to_string(p)) + " coefficients missing or mis-sized");
    }
    l += exact_phase_loglik(data, Eigen::Map<const Eigen::VectorXd>(th.data(), static_cast<Eigen::Index>(th.size())));
  }
  return l;
}

double exact_transition_log_probability(const Network& prev, const Network& next,
                                        const StergmModel& model) {
  const auto d = decompose_transition(prev, next);
  double l = 0.0;
  for (Phase p : {Phase::formation, Phase::dissolution}) {
    const PhaseSpace space(p, prev);
    const auto& stats = model.statistics(p);
    const auto eta = model.eta(p);
    const ExactPhase ex = exact_phase(space, stats, eta);
    const auto g = stats.evaluate(p == Phase::formation ? d.formation : d.dissolution, prev);
    double s = 0.0;
    for (std::size_t k = 0; k < g.size(); ++k) s += eta[k] * g[k];
    l += s - ex.log_normalizer;
  }
  return l;
}

double exact_joint_log_probability(const Network& prev, const Network& next,
                                   const StergmModel& model) {
  if (!same_shape(prev, next)) throw InputError("networks differ in shape");
  const auto all = prev.all_dyads();
  Network base(prev.size(), prev.directed());
  const auto& fs = model.statistics(Phase::formation);
  const auto& ds = model.statistics(Phase::dissolution);
  const auto ef = model.eta(Phase::formation);
  const auto ed = model.eta(Phase::dissolution);
  auto score = [&](const Network& y) {
    const auto gf = fs.evaluate(set_union(y, prev), prev);
    const auto gd = ds.evaluate(set_intersection(y, prev), prev);
    double s = 0.0;
    for (std::size_t k = 0; k < gf.size(); ++k) s += ef[k] * gf[k];
    for (std::size_t k = 0; k < gd.size(); ++k) s += ed[k] * gd[k];
    return s;
  };
  std::vector<double> logw;
  logw.reserve(std::size_t{1} << std::min(all.size(), kMaxEnumerableDyads));
  Enumerate(base, all, [&](const Network& y, std::uint64_t) { logw.push_back(score(y)); });
  return score(next) - LogSumExp(logw);
}

}  // namespace stergm
