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

#include "stergm/series_io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

#include <json.hpp>

#include "stergm/error.hpp"

namespace stergm {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string Trim(std::string_view s) {
  const auto begin = s.find_first_not_of(" \t\r\n\xEF\xBB\xBF");
  if (begin == std::string_view::npos) return {};
  const auto end = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(begin, end - begin + 1));
}

std::vector<std::string> SplitCsv(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream in(line);
  std::string field;
  while (std::getline(in, field, ',')) fields.push_back(Trim(field));
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

template <typename T>
std::optional<T> ParseNumber(const std::string& text) {
  T value{};
  const char* first = text.data();
  const char* last = first + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || text.empty()) return std::nullopt;
  return value;
}

std::string FormatDouble(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

// Parses an edge list, appending every problem to `violations`.
std::vector<Dyad> ParseEdgeList(const fs::path& path, int n, bool directed,
                                std::vector<std::string>& violations) {
  std::ifstream in(path);
  if (!in) {
    violations.push_back("cannot open " + path.string());
    return {};
  }
  const std::string where = path.filename().string();
  std::vector<Dyad> ties;
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  Network seen(n, directed);
  while (std::getline(in, line)) {
    ++line_no;
    const std::string trimmed = Trim(line);
    if (trimmed.empty()) continue;
    const auto fields = SplitCsv(trimmed);
    const std::string loc = where + ":" + std::to_string(line_no);
    if (!header_seen) {
      header_seen = true;
      if (fields.size() != 2 || fields[0] != "tail" || fields[1] != "head") {
        violations.push_back(loc + ": expected header 'tail,head'");
      }
      continue;
    }
    if (fields.size() != 2) {
      violations.push_back(loc + ": malformed row '" + trimmed + "'");
      continue;
    }
    const auto tail = ParseNumber<int>(fields[0]);
    const auto head = ParseNumber<int>(fields[1]);
    if (!tail || !head) {
      violations.push_back(loc + ": malformed row '" + trimmed + "'");
      continue;
    }
    if (*tail == *head) {
      violations.push_back(loc + ": self-loop " + trimmed);
      continue;
    }
    if (*tail < 1 || *head < 1 || *tail > n || *head > n) {
      violations.push_back(loc + ": node index out of range 1.." + std::to_string(n) + " in " + trimmed);
      continue;
    }
    if (!directed && *tail > *head) {
      violations.push_back(loc + ": undirected rows need tail < head, got " + trimmed);
      continue;
    }
    const Dyad d{*tail - 1, *head - 1};
    if (seen.has(d)) {
      violations.push_back(loc + ": duplicate edge " + trimmed);
      continue;
    }
    seen.add(d);
    ties.push_back(d);
  }
  if (!header_seen) violations.push_back(where + ": empty file, expected header 'tail,head'");
  return ties;
}

NodeAttribute* FindAttr(std::vector<NodeAttribute>& attrs, const std::string& name) {
  for (auto& a : attrs) {
    if (a.name == name) return &a;
  }
  return nullptr;
}

std::vector<NodeAttribute> ParseNodeAttrs(const fs::path& path, int n,
                                          std::vector<std::string>& violations) {
  std::ifstream in(path);
  if (!in) {
    violations.push_back("cannot open " + path.string());
    return {};
  }
  const std::string where = path.filename().string();
  std::string line;
  std::getline(in, line);
  const auto header = SplitCsv(Trim(line));
  if (header.size() < 2 || header[0] != "node") {
    violations.push_back(where + ":1: expected header 'node,<name>...'");
    return {};
  }
  std::vector<NodeAttribute> attrs;
  for (std::size_t c = 1; c < header.size(); ++c) {
    if (header[c].empty() || FindAttr(attrs, header[c]) != nullptr) {
      violations.push_back(where + ":1: empty or repeated attribute name");
      return {};
    }
    attrs.push_back({header[c], std::vector<std::string>(static_cast<std::size_t>(n))});
  }
  std::vector<bool> filled(static_cast<std::size_t>(n), false);
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string trimmed = Trim(line);
    if (trimmed.empty()) continue;
    const auto fields = SplitCsv(trimmed);
    const std::string loc = where + ":" + std::to_string(line_no);
    const auto node = fields.empty() ? std::nullopt : ParseNumber<int>(fields[0]);
    if (fields.size() != header.size() || !node) {
      violations.push_back(loc + ": malformed row '" + trimmed + "'");
      continue;
    }
    if (*node < 1 || *node > n) {
      violations.push_back(loc + ": node index out of range 1.." + std::to_string(n));
      continue;
    }
    const auto idx = static_cast<std::size_t>(*node - 1);
    if (filled[idx]) {
      violations.push_back(loc + ": node " + fields[0] + " listed twice");
      continue;
    }
    filled[idx] = true;
    for (std::size_t c = 1; c < fields.size(); ++c) attrs[c - 1].values[idx] = fields[c];
  }
  for (std::size_t i = 0; i < filled.size(); ++i) {
    if (!filled[i]) violations.push_back(where + ": no row for node " + std::to_string(i + 1));
  }
  return attrs;
}

std::optional<DyadCovariate> ParseDyadCov(const std::string& name, const fs::path& path, int n,
                                          std::vector<std::string>& violations) {
  std::ifstream in(path);
  if (!in) {
    violations.push_back("cannot open " + path.string());
    return std::nullopt;
  }
  const std::string where = path.filename().string();
  DyadCovariate cov{name, n, {}};
  cov.x.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  std::string line;
  std::size_t rows = 0;
  std::size_t line_no = 0;
  const std::size_t before = violations.size();
  while (std::getline(in, line)) {
    ++line_no;
    const std::string trimmed = Trim(line);
    if (trimmed.empty()) continue;
    const auto fields = SplitCsv(trimmed);
    if (fields.size() != static_cast<std::size_t>(n)) {
      violations.push_back(where + ":" + std::to_string(line_no) + ": expected " + std::to_string(n) +
                           " columns");
      continue;
    }
    for (const auto& f : fields) {
      const auto v = ParseNumber<double>(f);
      if (!v) {
        violations.push_back(where + ":" + std::to_string(line_no) + ": not a number '" + f + "'");
        cov.x.push_back(0.0);
      } else {
        cov.x.push_back(*v);
      }
    }
    ++rows;
  }
  if (rows != static_cast<std::size_t>(n)) {
    violations.push_back(where + ": expected " + std::to_string(n) + " rows, found " +
                         std::to_string(rows));
  }
  if (violations.size() != before) return std::nullopt;
  return cov;
}

struct SnapshotRef {
  fs::path path;
  int n = 0;
  bool directed = false;
};

struct Manifest {
  int n = 0;
  bool directed = false;
  std::vector<SnapshotRef> snapshots;
  std::optional<fs::path> node_attrs;
  std::vector<std::pair<std::string, fs::path>> dyad_covs;
};

Manifest ReadManifest(const fs::path& manifest_path, std::vector<std::string>& violations) {
  Manifest m;
  std::ifstream in(manifest_path);
  if (!in) {
    violations.push_back("cannot open manifest " + manifest_path.string());
    return m;
  }
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    violations.push_back("manifest is not valid JSON: " + std::string(e.what()));
    return m;
  }
  const fs::path base = manifest_path.parent_path();
  auto resolve = [&](const std::string& p) { return fs::path(p).is_absolute() ? fs::path(p) : base / p; };
  if (!doc.is_object()) {
    violations.push_back("manifest must be a JSON object");
    return m;
  }
  if (!doc.contains("n") || !doc["n"].is_number_integer() || doc["n"].get<int>() < 2) {
    violations.push_back("manifest field 'n' must be an integer >= 2");
  } else {
    m.n = doc["n"].get<int>();
  }
  if (!doc.contains("directed") || !doc["directed"].is_boolean()) {
    violations.push_back("manifest field 'directed' must be a boolean");
  } else {
    m.directed = doc["directed"].get<bool>();
  }
  if (!doc.contains("snapshots") || !doc["snapshots"].is_array()) {
    violations.push_back("manifest field 'snapshots' must be an array of paths");
  } else {
    std::size_t index = 0;
    for (const auto& s : doc["snapshots"]) {
      SnapshotRef ref{{}, m.n, m.directed};
      if (s.is_string()) {
        ref.path = resolve(s.get<std::string>());
      } else if (s.is_object() && s.contains("path") && s["path"].is_string()) {
        ref.path = resolve(s["path"].get<std::string>());
        if (s.contains("n")) {
          if (s["n"].is_number_integer()) {
            ref.n = s["n"].get<int>();
          } else {
            violations.push_back("snapshot " + std::to_string(index) + ": 'n' must be an integer");
          }
        }
        if (s.contains("directed")) {
          if (s["directed"].is_boolean()) {
            ref.directed = s["directed"].get<bool>();
          } else {
            violations.push_back("snapshot " + std::to_string(index) + ": 'directed' must be a boolean");
          }
        }
      } else {
        violations.push_back("snapshot " + std::to_string(index) + ": expected a path or {\"path\": ...}");
        ++index;
        continue;
      }
      m.snapshots.push_back(ref);
      ++index;
    }
    if (m.snapshots.size() < 2) violations.push_back("a series needs at least 2 snapshots");
  }
  if (doc.contains("node_attrs") && !doc["node_attrs"].is_null()) {
    if (doc["node_attrs"].is_string()) {
      m.node_attrs = resolve(doc["node_attrs"].get<std::string>());
    } else {
      violations.push_back("manifest field 'node_attrs' must be a path");
    }
  }
  if (doc.contains("dyad_covs") && !doc["dyad_covs"].is_null()) {
    if (!doc["dyad_covs"].is_object()) {
      violations.push_back("manifest field 'dyad_covs' must map names to paths");
    } else {
      for (const auto& [name, p] : doc["dyad_covs"].items()) {
        if (!p.is_string()) {
          violations.push_back("dyad covariate '" + name + "' must be a path");
          continue;
        }
        m.dyad_covs.emplace_back(name, resolve(p.get<std::string>()));
      }
    }
  }
  return m;
}

std::string JoinViolations(const std::vector<std::string>& v) {
  std::string out;
  for (const auto& s : v) {
    if (!out.empty()) out += "; ";
    out += s;
  }
  return out;
}

// Loads everything it can; problems land in `violations`.
NetworkSeries LoadChecked(const fs::path& manifest_path, std::vector<std::string>& violations) {
  const Manifest m = ReadManifest(manifest_path, violations);
  NetworkSeries series;
  if (m.n < 2) return series;
  bool shapes_ok = true;
  for (std::size_t t = 0; t < m.snapshots.size(); ++t) {
    const auto& ref = m.snapshots[t];
    if (ref.n != m.n || ref.directed != m.directed) {
      violations.push_back("snapshot " + std::to_string(t) + " (" + ref.path.filename().string() +
                           ") has n=" + std::to_string(ref.n) + (ref.directed ? " directed" : " undirected") +
                           ", expected n=" + std::to_string(m.n) + (m.directed ? " directed" : " undirected"));
      shapes_ok = false;
    }
    if (ref.n < 2) continue;
    const std::size_t before = violations.size();
    const auto ties = ParseEdgeList(ref.path, ref.n, ref.directed, violations);
    if (violations.size() == before) series.networks.push_back(Network::from_edges(ref.n, ref.directed, ties));
  }
  if (!shapes_ok || series.networks.size() != m.snapshots.size()) series.networks.clear();
  if (m.node_attrs) series.covariates.node_attrs = ParseNodeAttrs(*m.node_attrs, m.n, violations);
  for (const auto& [name, path] : m.dyad_covs) {
    if (auto cov = ParseDyadCov(name, path, m.n, violations)) {
      series.covariates.dyad_covs.push_back(std::move(*cov));
    }
  }
  if (violations.empty()) {
    try {
      series.covariates.validate(m.n, m.directed);
    } catch (const InputError& e) {
      violations.emplace_back(e.what());
    }
  }
  return series;
}

}  // namespace

void NetworkSeries::validate() const {
  if (networks.size() < 2) throw InputError("a series needs at least 2 snapshots");
  for (std::size_t t = 1; t < networks.size(); ++t) {
    if (!same_shape(networks[t], networks[0])) {
      throw InputError("snapshot " + std::to_string(t) + " differs in size or directedness");
    }
  }
  covariates.validate(size(), directed());
}

NetworkSeries load_series(const fs::path& manifest) {
  std::vector<std::string> violations;
  NetworkSeries series = LoadChecked(manifest, violations);
  if (!violations.empty()) throw InputError(JoinViolations(violations));
  series.validate();
  return series;
}

Network read_edge_list(const fs::path& path, int n, bool directed) {
  std::vector<std::string> violations;
  const auto ties = ParseEdgeList(path, n, directed, violations);
  if (!violations.empty()) throw InputError(JoinViolations(violations));
  return Network::from_edges(n, directed, ties);
}

std::vector<NodeAttribute> read_node_attributes(const fs::path& path, int n) {
  std::vector<std::string> violations;
  auto attrs = ParseNodeAttrs(path, n, violations);
  if (!violations.empty()) throw InputError(JoinViolations(violations));
  return attrs;
}

DyadCovariate read_dyad_covariate(const std::string& name, const fs::path& path, int n) {
  std::vector<std::string> violations;
  auto cov = ParseDyadCov(name, path, n, violations);
  if (!violations.empty() || !cov) throw InputError(JoinViolations(violations));
  return *cov;
}

void write_edge_list(const fs::path& path, const Network& y) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path.string());
  out << "tail,head\n";
  for (const Dyad& d : y.edges()) out << d.tail + 1 << ',' << d.head + 1 << '\n';
  if (!out) throw InputError("failed writing " + path.string());
}

fs::path save_series(const NetworkSeries& series, const fs::path& dir) {
  series.validate();
  fs::create_directories(dir);
  json doc;
  doc["n"] = series.size();
  doc["directed"] = series.directed();
  json snaps = json::array();
  for (std::size_t t = 0; t < series.networks.size(); ++t) {
    const std::string name = "t" + std::to_string(t) + ".csv";
    write_edge_list(dir / name, series.networks[t]);
    snaps.push_back(name);
  }
  doc["snapshots"] = snaps;
  const auto& cov = series.covariates;
  if (!cov.node_attrs.empty()) {
    std::ofstream out(dir / "node_attrs.csv");
    out << "node";
    for (const auto& a : cov.node_attrs) out << ',' << a.name;
    out << '\n';
    for (int i = 0; i < series.size(); ++i) {
      out << i + 1;
      for (const auto& a : cov.node_attrs) out << ',' << a.values[static_cast<std::size_t>(i)];
      out << '\n';
    }
    if (!out) throw InputError("failed writing node attributes");
    doc["node_attrs"] = "node_attrs.csv";
  }
  if (!cov.dyad_covs.empty()) {
    json covs = json::object();
    for (const auto& c : cov.dyad_covs) {
      const std::string name = "dyadcov_" + c.name + ".csv";
      std::ofstream out(dir / name);
      for (int i = 0; i < c.n; ++i) {
        for (int j = 0; j < c.n; ++j) out << (j ? "," : "") << FormatDouble(c.at(i, j));
        out << '\n';
      }
      if (!out) throw InputError("failed writing " + name);
      covs[c.name] = name;
    }
    doc["dyad_covs"] = covs;
  }
  const fs::path manifest = dir / "manifest.json";
  std::ofstream out(manifest);
  out << doc.dump(2) << '\n';
  if (!out) throw InputError("failed writing " + manifest.string());
  return manifest;
}

SeriesValidation validate_series(const fs::path& manifest) {
  SeriesValidation report;
  NetworkSeries series = LoadChecked(manifest, report.violations);
  if (series.networks.size() >= 2) {
    for (std::size_t t = 1; t < series.networks.size(); ++t) {
      report.transitions.push_back(summarize_transition(series.networks[t - 1], series.networks[t]));
    }
  }
  return report;
}

}  // namespace stergm
