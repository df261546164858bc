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
#include <vector>

namespace stergm {

/// One value per node. Values are kept as text; categorical terms compare
/// labels, numeric use parses them.
struct NodeAttribute {
  std::string name;
  std::vector<std::string> values;

  /// Distinct labels in sorted order.
  std::vector<std::string> levels() const;
};

/// Dense n-by-n real matrix, row-major.
struct DyadCovariate {
  std::string name;
  int n = 0;
  std::vector<double> x;

  double at(int i, int j) const {
    return x[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)];
  }
};

struct Covariates {
  std::vector<NodeAttribute> node_attrs;
  std::vector<DyadCovariate> dyad_covs;

  const NodeAttribute* find_attr(const std::string& name) const;
  const DyadCovariate* find_dyad_cov(const std::string& name) const;

  /// Throws InputError unless every attribute has n values and every matrix
  /// is n-by-n, finite, and symmetric when `directed` is false.
  void validate(int n, bool directed) const;

  /// Covariates with node i moved to perm[i].
  Covariates relabel(std::span<const int> perm) const;
};

}  // namespace stergm
