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

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "stergm/covariates.hpp"
#include "stergm/network.hpp"

namespace stergm {

enum class Phase { formation, dissolution };

std::string_view to_string(Phase phase);

enum class TermKind {
  edges,
  mixing,         // ties from group g1 to group g2 of a categorical attribute
  degree,         // actors with degree d (undirected)
  reciprocity,    // mutual pairs (directed)
  transitive_ties,
  cyclical_ties,
  odeg_pop_sqrt,  // sum over ties (i,j) of sqrt(in-degree of j)
  edge_cov,
  isolate_from_multiple,  // dissolution only; reads the previous network
  homophily,              // shorthand: mixing(attr, g, g) for every level g
  heterophily,            // shorthand: mixing(attr, g1, g2)
};

/// One model term as written in a model file, e.g. `mixing(sex, F, M)`.
struct TermSpec {
  TermKind kind = TermKind::edges;
  int degree = 0;
  std::string attr;
  std::string group1;
  std::string group2;
  std::string covariate;

  static TermSpec edges() { return {}; }
  static TermSpec mixing(std::string attr, std::string g1, std::string g2);
  static TermSpec degree_count(int d);
  static TermSpec reciprocity() { return Of(TermKind::reciprocity); }
  static TermSpec transitive_ties() { return Of(TermKind::transitive_ties); }
  static TermSpec cyclical_ties() { return Of(TermKind::cyclical_ties); }
  static TermSpec odeg_pop_sqrt() { return Of(TermKind::odeg_pop_sqrt); }
  static TermSpec edge_cov(std::string name);
  static TermSpec isolate_from_multiple() { return Of(TermKind::isolate_from_multiple); }

  /// Parses the model-file syntax. Throws InputError on unknown terms or bad arguments.
  static TermSpec parse(std::string_view text);

  /// Model-file spelling; parse(label()) round-trips.
  std::string label() const;

  bool is_shorthand() const { return kind == TermKind::homophily || kind == TermKind::heterophily; }
  /// Reads the previous network directly rather than only through the phase constraint.
  bool explicitly_dynamic() const { return kind == TermKind::isolate_from_multiple; }

  friend bool operator==(const TermSpec&, const TermSpec&) = default;

 private:
  static TermSpec Of(TermKind k) {
    TermSpec t;
    t.kind = k;
    return t;
  }
};

/// Replaces shorthand terms by the mixing terms they stand for.
std::vector<TermSpec> expand_terms(std::span<const TermSpec> terms, const Covariates& covariates);

enum class EtaMap { identity, curved };

/// Formation and dissolution term lists with their coefficient blocks.
/// The parameter space is the unconstrained product of the two blocks.
struct ModelSpec {
  std::vector<TermSpec> formation_terms;
  std::vector<TermSpec> dissolution_terms;
  std::vector<double> theta_plus;
  std::vector<double> theta_minus;
  EtaMap eta_map = EtaMap::identity;

  const std::vector<TermSpec>& terms(Phase p) const {
    return p == Phase::formation ? formation_terms : dissolution_terms;
  }
  std::vector<TermSpec>& terms(Phase p) {
    return p == Phase::formation ? formation_terms : dissolution_terms;
  }
  const std::vector<double>& theta(Phase p) const {
    return p == Phase::formation ? theta_plus : theta_minus;
  }
  std::vector<double>& theta(Phase p) { return p == Phase::formation ? theta_plus : theta_minus; }

  /// Checks coefficient lengths (when given) against the term lists.
  void validate() const;
};

/// Expands shorthand terms in both phases. A shorthand's coefficient is
/// copied to every term it expands to.
ModelSpec expand_model(const ModelSpec& model, const Covariates& covariates);

/// Statistic vector of one term on a phase network `y` anchored at `y_prev`.
std::vector<double> evaluate(const TermSpec& term, const Network& y, const Network& y_prev,
                             const Covariates& covariates = {});

/// g(y ⊕ dyad) - g(y) for one term. Throws InputError when the dyad is not
/// toggleable in `phase` (present in y_prev for formation, absent for dissolution).
std::vector<double> change_score(const TermSpec& term, Phase phase, const Network& y,
                                 const Network& y_prev, Dyad dyad,
                                 const Covariates& covariates = {});

}  // namespace stergm
