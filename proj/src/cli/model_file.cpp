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

#include "stergm/model_file.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "stergm/error.hpp"

namespace stergm {

namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double ParseNumber(std::string_view s, std::size_t line) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) {
    throw InputError("model line " + std::to_string(line) + ": '" + std::string(s) + "' is not a number");
  }
  return v;
}

}  // namespace

ModelSpec parse_model(std::string_view text) {
  ModelSpec model;
  std::optional<Phase> section;
  std::vector<bool> has_coef[2];
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string_view s = raw;
    if (const auto hash = s.find('#'); hash != std::string_view::npos) s = s.substr(0, hash);
    s = Trim(s);
    if (s.empty()) continue;
    if (s.front() == '[') {
      if (s == "[formation]") {
        section = Phase::formation;
      } else if (s == "[dissolution]") {
        section = Phase::dissolution;
      } else {
        throw InputError("model line " + std::to_string(line) + ": unknown section " + std::string(s));
      }
      continue;
    }
    std::string_view lhs = s;
    std::optional<std::string_view> rhs;
    if (const auto eq = s.find('='); eq != std::string_view::npos) {
      lhs = Trim(s.substr(0, eq));
      rhs = Trim(s.substr(eq + 1));
    }
    if (!section) {
      if (lhs == "eta_map" && rhs) {
        if (*rhs == "identity") {
          model.eta_map = EtaMap::identity;
        } else if (*rhs == "curved") {
          model.eta_map = EtaMap::curved;
        } else {
          throw InputError("model line " + std::to_string(line) + ": eta_map must be identity or curved");
        }
        continue;
      }
      throw InputError("model line " + std::to_string(line) +
                       ": terms must follow a [formation] or [dissolution] header");
    }
    TermSpec term;
    try {
      term = TermSpec::parse(lhs);
    } catch (const InputError& e) {
      throw InputError("model line " + std::to_string(line) + ": " + e.what());
    }
    const auto p = static_cast<std::size_t>(*section);
    model.terms(*section).push_back(term);
    has_coef[p].push_back(rhs.has_value());
    if (rhs) model.theta(*section).push_back(ParseNumber(*rhs, line));
  }
  for (Phase p : {Phase::formation, Phase::dissolution}) {
    const auto& flags = has_coef[static_cast<std::size_t>(p)];
    const auto given = static_cast<std::size_t>(std::count(flags.begin(), flags.end(), true));
    if (given != 0 && given != flags.size()) {
      throw InputError(std::string(to_string(p)) +
                       " block: give a coefficient for every term or for none");
    }
  }
  return model;
}

ModelSpec load_model(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open model file " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_model(text.str());
}

std::string format_model(const ModelSpec& model) {
  std::ostringstream os;
  os.precision(17);
  if (model.eta_map == EtaMap::curved) os << "eta_map = curved\n";
  for (Phase p : {Phase::formation, Phase::dissolution}) {
    os << "[" << to_string(p) << "]\n";
    const auto& terms = model.terms(p);
    const auto& theta = model.theta(p);
    for (std::size_t k = 0; k < terms.size(); ++k) {
      os << terms[k].label();
      if (theta.size() == terms.size()) os << " = " << theta[k];
      os << "\n";
    }
  }
  return os.str();
}

}  // namespace stergm
