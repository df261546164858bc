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

#include "stergm/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace stergm {

namespace {

std::vector<double> ToVector(const Eigen::VectorXd& v) { return {v.data(), v.data() + v.size()}; }

std::string Fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

}  // namespace

std::string significance_stars(double p) {
  if (p < 0.001) return "***";
  if (p < 0.01) return "**";
  if (p < 0.05) return "*";
  return "";
}

nlohmann::json to_json(const PhaseFit& fit) {
  nlohmann::json j;
  j["phase"] = to_string(fit.phase);
  j["loglik"] = fit.loglik;
  j["null_loglik"] = fit.null_loglik;
  j["free_dyads"] = fit.free_dyads;
  j["iterations"] = fit.iterations;
  j["converged"] = fit.converged;
  j["terms"] = nlohmann::json::array();
  const Eigen::VectorXd p = fit.theta.size() ? fit.p_values() : Eigen::VectorXd();
  for (std::size_t k = 0; k < fit.labels.size(); ++k) {
    const auto i = static_cast<Eigen::Index>(k);
    j["terms"].push_back({{"term", fit.labels[k]},
                          {"estimate", fit.theta[i]},
                          {"std_error", fit.std_error[i]},
                          {"mcmc_se", fit.mcmc_se[i]},
                          {"p_value", p[i]},
                          {"observed", fit.observed[i]},
                          {"expected", fit.expected[i]},
                          {"moment_se", fit.moment_se[i]},
                          {"ess_per_transition", fit.mean_ess[i]}});
  }
  nlohmann::json cov = nlohmann::json::array();
  for (Eigen::Index r = 0; r < fit.covariance.rows(); ++r) {
    cov.push_back(ToVector(fit.covariance.row(r).transpose()));
  }
  j["covariance"] = cov;
  return j;
}

nlohmann::json to_json(const DevianceRow& row) {
  return {{"phase", to_string(row.phase)},
          {"model", row.label},
          {"residual_deviance", row.residual_deviance},
          {"residual_df", row.residual_df},
          {"explained_deviance", row.explained_deviance},
          {"explained_df", row.explained_df},
          {"aic", row.aic},
          {"p_value", row.p_value()}};
}

nlohmann::json to_json(const FitResult& fit) {
  nlohmann::json j;
  j["heterogeneity"] = to_string(fit.scheme);
  j["seed"] = fit.seed;
  j["loglik"] = fit.loglik();
  j["formation"] = to_json(fit.formation);
  j["dissolution"] = to_json(fit.dissolution);
  j["deviance"] = nlohmann::json::array();
  for (const auto& row : fit.deviance_table) j["deviance"].push_back(to_json(row));
  return j;
}

std::string format_coefficients(const FitResult& fit) {
  std::ostringstream os;
  for (Phase ph : {Phase::formation, Phase::dissolution}) {
    const PhaseFit& f = fit.phase(ph);
    os << (ph == Phase::formation ? "Formation" : "Dissolution") << "\n";
    if (f.labels.empty()) {
      os << "  (no terms)\n";
      continue;
    }
    std::size_t width = 4;
    for (const auto& l : f.labels) width = std::max(width, l.size());
    const Eigen::VectorXd p = f.p_values();
    for (std::size_t k = 0; k < f.labels.size(); ++k) {
      const auto i = static_cast<Eigen::Index>(k);
      std::string est = Fixed(f.theta[i], 3) + " (" + Fixed(f.std_error[i], 3) + ")";
      os << "  " << f.labels[k] << std::string(width - f.labels[k].size() + 2, ' ') << est
         << std::string(est.size() < 18 ? 18 - est.size() : 1, ' ') << significance_stars(p[i]) << "\n";
    }
  }
  os << "Significance: *** p < 0.001, ** p < 0.01, * p < 0.05\n";
  return os.str();
}

std::string format_deviance(const std::vector<DevianceRow>& rows) {
  std::ostringstream os;
  std::size_t width = 5;
  for (const auto& r : rows) width = std::max(width, r.label.size());
  auto pad = [](std::string s, std::size_t w) {
    if (s.size() < w) s.insert(0, w - s.size(), ' ');
    return s;
  };
  std::string current;
  for (const auto& r : rows) {
    const std::string phase(to_string(r.phase));
    if (phase != current) {
      current = phase;
      os << (r.phase == Phase::formation ? "Formation" : "Dissolution") << "\n";
      os << "  " << std::string(width, ' ') << pad("Resid. Dev (d.f.)", 22) << pad("Expl. Dev (d.f.)", 20)
         << pad("AIC", 10) << "\n";
    }
    const std::string resid = Fixed(r.residual_deviance, 0) + " (" + std::to_string(r.residual_df) + ")";
    std::string expl;
    if (!r.is_null) {
      expl = Fixed(r.explained_deviance, 0) + " (" + std::to_string(r.explained_df) + ")" +
             significance_stars(r.p_value());
    }
    os << "  " << r.label << std::string(width - r.label.size(), ' ') << pad(resid, 22) << pad(expl, 20)
       << pad(Fixed(r.aic, 0), 10) << "\n";
  }
  return os.str();
}

}  // namespace stergm
