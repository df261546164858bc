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

// Panel files.
//
// Edge list: UTF-8 CSV with header `tail,head`, one 1-based pair per row;
// undirected lists need tail < head.
//
// Manifest (JSON):
//   { "n": 26, "directed": true,
//     "snapshots": ["t0.csv", "t1.csv", ...],
//     "node_attrs": "attrs.csv",                 // optional, header node,<name>...
//     "dyad_covs": { "primary": "primary.csv" }  // optional, dense n-by-n CSV
//   }
// A snapshot may also be an object {"path": ..., "n": ..., "directed": ...}
// overriding the top-level shape; all snapshots must agree in the end.
// Relative paths resolve against the manifest's directory.

#include <filesystem>
#include <string>
#include <vector>

#include "stergm/covariates.hpp"
#include "stergm/network.hpp"
#include "stergm/transition.hpp"

namespace stergm {

struct NetworkSeries {
  std::vector<Network> networks;
  Covariates covariates;

  int size() const { return networks.empty() ? 0 : networks.front().size(); }
  bool directed() const { return !networks.empty() && networks.front().directed(); }
  std::size_t transitions() const { return networks.empty() ? 0 : networks.size() - 1; }

  /// Throws InputError unless there are at least two snapshots of one shape
  /// and the covariates fit that shape.
  void validate() const;
};

NetworkSeries load_series(const std::filesystem::path& manifest);

/// Writes t0.csv..tT.csv, covariate files and manifest.json into `dir`
/// (created if needed). Returns the manifest path.
std::filesystem::path save_series(const NetworkSeries& series, const std::filesystem::path& dir);

Network read_edge_list(const std::filesystem::path& path, int n, bool directed);
void write_edge_list(const std::filesystem::path& path, const Network& y);

/// CSV with header node,<name>... and one row per node (1-based).
std::vector<NodeAttribute> read_node_attributes(const std::filesystem::path& path, int n);
/// Dense n-by-n CSV without header.
DyadCovariate read_dyad_covariate(const std::string& name, const std::filesystem::path& path, int n);

struct SeriesValidation {
  std::vector<std::string> violations;
  std::vector<TransitionSummary> transitions;  // filled when the snapshots load

  bool ok() const { return violations.empty(); }
};

/// Checks every file the manifest references and collects all violations
/// instead of stopping at the first.
SeriesValidation validate_series(const std::filesystem::path& manifest);

}  // namespace stergm
