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

#include <cmath>

#include "stergm/estimation.hpp"
#include "stergm/sampler.hpp"

namespace stergm {

namespace {

constexpr double kRidge = 1e-6;
constexpr double kMaxStart = 10.0;  // separated data would otherwise run off to infinity

double Log1pExp(double x) { return x > 0 ? x + std::log1p(std::exp(-x)) : std::log1p(std::exp(x)); }

}  // namespace

Eigen::VectorXd mple(const PhaseData& data) {
  const auto q = static_cast<Eigen::Index>(data.coefficients());
  if (q == 0) return {};
  // Design rows: change statistics for turning each free dyad on, mapped to theta space.
  std::vector<Eigen::VectorXd> rows;
  std::vector<double> response;
  std::vector<double> buf(data.stats.size());
  for (std::size_t t = 0; t < data.transitions(); ++t) {
    const PhaseSpace space(data.phase, data.anchors[t]);
    const Network& y = data.observed[t];
    for (const Dyad& d : space.free_dyads()) {
      data.stats.change(y, data.anchors[t], d, buf);
      const bool on = y.has(d);
      Eigen::VectorXd x = Eigen::VectorXd::Zero(q);
      Eigen::VectorXd g(static_cast<Eigen::Index>(buf.size()));
      for (std::size_t k = 0; k < buf.size(); ++k) g[static_cast<Eigen::Index>(k)] = on ? -buf[k] : buf[k];
      data.layout.accumulate(t, g, x);
      rows.push_back(std::move(x));
      response.push_back(on ? 1.0 : 0.0);
    }
  }
  Eigen::MatrixXd X(static_cast<Eigen::Index>(rows.size()), q);
  for (std::size_t r = 0; r < rows.size(); ++r) X.row(static_cast<Eigen::Index>(r)) = rows[r].transpose();
  const Eigen::VectorXd yv = Eigen::Map<const Eigen::VectorXd>(response.data(), static_cast<Eigen::Index>(response.size()));

  auto objective = [&](const Eigen::VectorXd& b) {
    const Eigen::VectorXd lin = X * b;
    double l = 0.0;
    for (Eigen::Index r = 0; r < lin.size(); ++r) l += yv[r] * lin[r] - Log1pExp(lin[r]);
    return l - 0.5 * kRidge * b.squaredNorm();
  };

  Eigen::VectorXd beta = Eigen::VectorXd::Zero(q);
  double current = objective(beta);
  for (int it = 0; it < 100; ++it) {
    const Eigen::VectorXd lin = X * beta;
    Eigen::VectorXd p(lin.size());
    for (Eigen::Index r = 0; r < lin.size(); ++r) p[r] = 1.0 / (1.0 + std::exp(-lin[r]));
    const Eigen::VectorXd grad = X.transpose() * (yv - p) - kRidge * beta;
    const Eigen::VectorXd w = p.cwiseProduct(Eigen::VectorXd::Ones(p.size()) - p);
    Eigen::MatrixXd H = X.transpose() * w.asDiagonal() * X;
    H.diagonal().array() += kRidge;
    const Eigen::VectorXd step = H.ldlt().solve(grad);
    double alpha = 1.0;
    Eigen::VectorXd next = beta + step;
    double value = objective(next);
    while (value < current && alpha > 1e-8) {
      alpha *= 0.5;
      next = beta + alpha * step;
      value = objective(next);
    }
    if (value < current) break;
    const double moved = (next - beta).cwiseAbs().maxCoeff();
    beta = next;
    current = value;
    if (moved < 1e-10 || beta.cwiseAbs().maxCoeff() > kMaxStart) break;
  }
  return beta.cwiseMax(-kMaxStart).cwiseMin(kMaxStart);
}

}  // namespace stergm
