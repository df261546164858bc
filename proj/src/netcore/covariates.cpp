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

#include "stergm/covariates.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "stergm/error.hpp"

namespace stergm {

std::vector<std::string> NodeAttribute::levels() const {
  std::set<std::string> distinct(values.begin(), values.end());
  return {distinct.begin(), distinct.end()};
}

const NodeAttribute* Covariates::find_attr(const std::string& name) const {
  for (const auto& a : node_attrs) {
    if (a.name == name) return &a;
  }
  return nullptr;
}

const DyadCovariate* Covariates::find_dyad_cov(const std::string& name) const {
  for (const auto& c : dyad_covs) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

void Covariates::validate(int n, bool directed) const {
  const auto size = static_cast<std::size_t>(n);
  for (const auto& a : node_attrs) {
    if (a.values.size() != size) {
      throw InputError("node attribute '" + a.name + "' has " + std::to_string(a.values.size()) +
                       " values, expected " + std::to_string(n));
    }
  }
  for (const auto& c : dyad_covs) {
    if (c.n != n || c.x.size() != size * size) {
      throw InputError("dyad covariate '" + c.name + "' is not " + std::to_string(n) + "x" +
                       std::to_string(n));
    }
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (!std::isfinite(c.at(i, j))) {
          throw InputError("dyad covariate '" + c.name + "' has a non-finite entry at (" +
                           std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
        }
        if (!directed && c.at(i, j) != c.at(j, i)) {
          throw InputError("dyad covariate '" + c.name + "' must be symmetric for undirected networks");
        }
      }
    }
  }
}

Covariates Covariates::relabel(std::span<const int> perm) const {
  Covariates out = *this;
  for (std::size_t a = 0; a < node_attrs.size(); ++a) {
    for (std::size_t i = 0; i < perm.size(); ++i) {
      out.node_attrs[a].values[static_cast<std::size_t>(perm[i])] = node_attrs[a].values[i];
    }
  }
  for (std::size_t c = 0; c < dyad_covs.size(); ++c) {
    const auto n = static_cast<std::size_t>(dyad_covs[c].n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        out.dyad_covs[c].x[static_cast<std::size_t>(perm[i]) * n + static_cast<std::size_t>(perm[j])] =
            dyad_covs[c].x[i * n + j];
      }
    }
  }
  return out;
}

}  // namespace stergm
