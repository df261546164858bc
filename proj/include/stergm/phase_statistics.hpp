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
#include <span>
#include <string>
#include <vector>

#include "stergm/covariates.hpp"
#include "stergm/network.hpp"
#include "stergm/terms.hpp"

namespace stergm {

/// The statistic vector g⁺ or g⁻ of one phase, bound to a network shape and
/// its covariates. Evaluation always runs on the phase network itself
/// (y⁺ or y⁻); the previous network is passed as the anchor.
class PhaseStatistics {
 public:
  PhaseStatistics() = default;

  /// Expands shorthand terms and resolves covariates. Throws InputError for
  /// missing covariates, terms that do not fit the network type, or
  /// dissolution-only terms used in formation.
  PhaseStatistics(Phase phase, std::span<const TermSpec> terms, const Covariates& covariates, int n,
                  bool directed);

  Phase phase() const { return phase_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  const std::vector<TermSpec>& terms() const { return specs_; }
  std::vector<std::string> labels() const;

  void evaluate(const Network& y, const Network& anchor, std::span<double> out) const;
  std::vector<double> evaluate(const Network& y, const Network& anchor) const;

  /// out = g(y ⊕ d) - g(y); no phase check, `d` must be a valid dyad.
  void change(const Network& y, const Network& anchor, Dyad d, std::span<double> out) const;

 private:
  struct Bound {
    TermKind kind;
    int degree = 0;
    std::vector<std::uint8_t> in_group1;
    std::vector<std::uint8_t> in_group2;
    std::vector<double> cov;
  };

  double Evaluate(const Bound& t, const Network& y, const Network& anchor) const;
  double Change(const Bound& t, const Network& y, const Network& anchor, Dyad d) const;
  double CovAt(const Bound& t, int i, int j) const {
    return t.cov[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j)];
  }

  Phase phase_ = Phase::formation;
  int n_ = 0;
  bool directed_ = false;
  std::vector<TermSpec> specs_;
  std::vector<Bound> terms_;
};

}  // namespace stergm
