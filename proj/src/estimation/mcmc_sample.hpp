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

// Sampling helpers shared by the fitting and bridging code.

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "stergm/estimation.hpp"
#include "stergm/rng.hpp"
#include "stergm/sample_matrix.hpp"

namespace stergm::detail {

/// Statistic draws for every transition of one phase at one theta. Rows are
/// chain-major: chain c owns rows [c * per_chain, (c + 1) * per_chain).
struct PhaseSample {
  std::vector<SampleMatrix> g;
  std::size_t chains = 0;
  std::size_t per_chain = 0;

  std::size_t draws() const { return chains * per_chain; }
};

PhaseSample draw(const PhaseData& data, const Eigen::VectorXd& theta, const FitConfig& cfg,
                 std::size_t draws, const StreamId& stream);

double log_mean_exp(std::span<const double> a);

/// Normalized importance weights exp(a) / Σ exp(a).
std::vector<double> normalized_weights(std::span<const double> a);

/// Weighted mean and covariance of the columns of g.
void weighted_moments(const SampleMatrix& g, std::span<const double> w, Eigen::VectorXd& mean,
                      Eigen::MatrixXd& cov);

/// Covariance of the (weighted) mean of g's columns, estimated from batch
/// means within chains. Uniform weights when `w` is empty.
Eigen::MatrixXd mean_covariance(const SampleMatrix& g, std::span<const double> w, std::size_t chains,
                                std::size_t per_chain, std::size_t batches);

}  // namespace stergm::detail
