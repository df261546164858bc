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

#include "stergm/terms.hpp"

#include <cctype>
#include <charconv>

#include "stergm/error.hpp"
#include "stergm/phase_statistics.hpp"

namespace stergm {

namespace {

std::string Strip(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

struct Call {
  std::string name;
  std::vector<std::string> args;
  bool has_parens = false;
};

Call SplitCall(std::string_view text) {
  Call call;
  const std::string s = Strip(text);
  const auto open = s.find('(');
  if (open == std::string::npos) {
    call.name = s;
    return call;
  }
  if (s.back() != ')') throw InputError("term '" + s + "': missing ')'");
  call.has_parens = true;
  call.name = Strip(std::string_view(s).substr(0, open));
  const std::string inner = s.substr(open + 1, s.size() - open - 2);
  std::size_t start = 0;
  while (true) {
    const auto comma = inner.find(',', start);
    call.args.push_back(Strip(std::string_view(inner).substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (call.args.size() == 1 && call.args[0].empty()) call.args.clear();
  for (const auto& a : call.args) {
    if (a.empty()) throw InputError("term '" + s + "': empty argument");
  }
  return call;
}

void ExpectArgs(const Call& c, std::size_t count, std::string_view usage) {
  if (c.args.size() != count) {
    throw InputError("term '" + c.name + "' expects " + std::string(usage));
  }
}

}  // namespace

std::string_view to_string(Phase phase) {
  return phase == Phase::formation ? "formation" : "dissolution";
}

TermSpec TermSpec::mixing(std::string attr, std::string g1, std::string g2) {
  TermSpec t;
  t.kind = TermKind::mixing;
  t.attr = std::move(attr);
  t.group1 = std::move(g1);
  t.group2 = std::move(g2);
  return t;
}

TermSpec TermSpec::degree_count(int d) {
  if (d < 0) throw InputError("degree level must be >= 0");
  TermSpec t;
  t.kind = TermKind::degree;
  t.degree = d;
  return t;
}

TermSpec TermSpec::edge_cov(std::string name) {
  TermSpec t;
  t.kind = TermKind::edge_cov;
  t.covariate = std::move(name);
  return t;
}

TermSpec TermSpec::parse(std::string_view text) {
  const Call c = SplitCall(text);
  auto no_args = [&](TermSpec t) {
    if (c.has_parens && !c.args.empty()) throw InputError("term '" + c.name + "' takes no arguments");
    return t;
  };
  if (c.name == "edges") return no_args(edges());
  if (c.name == "reciprocity") return no_args(reciprocity());
  if (c.name == "transitive_ties") return no_args(transitive_ties());
  if (c.name == "cyclical_ties") return no_args(cyclical_ties());
  if (c.name == "odeg_pop_sqrt") return no_args(odeg_pop_sqrt());
  if (c.name == "isolate_from_multiple") return no_args(isolate_from_multiple());
  if (c.name == "mixing") {
    ExpectArgs(c, 3, "(attr, group1, group2)");
    return mixing(c.args[0], c.args[1], c.args[2]);
  }
  if (c.name == "degree") {
    ExpectArgs(c, 1, "(d)");
    int d = -1;
    const auto& a = c.args[0];
    auto [ptr, ec] = std::from_chars(a.data(), a.data() + a.size(), d);
    if (ec != std::errc() || ptr != a.data() + a.size() || d < 0) {
      throw InputError("degree level must be a non-negative integer, got '" + a + "'");
    }
    return degree_count(d);
  }
  if (c.name == "edge_cov") {
    ExpectArgs(c, 1, "(covariate)");
    return edge_cov(c.args[0]);
  }
  if (c.name == "homophily") {
    ExpectArgs(c, 1, "(attr)");
    TermSpec t;
    t.kind = TermKind::homophily;
    t.attr = c.args[0];
    return t;
  }
  if (c.name == "heterophily") {
    ExpectArgs(c, 3, "(attr, group1, group2)");
    TermSpec t = mixing(c.args[0], c.args[1], c.args[2]);
    t.kind = TermKind::heterophily;
    return t;
  }
  throw InputError("unknown term '" + Strip(text) + "'");
}

std::string TermSpec::label() const {
  switch (kind) {
    case TermKind::edges: return "edges";
    case TermKind::mixing: return "mixing(" + attr + ", " + group1 + ", " + group2 + ")";
    case TermKind::degree: return "degree(" + std::to_string(degree) + ")";
    case TermKind::reciprocity: return "reciprocity";
    case TermKind::transitive_ties: return "transitive_ties";
    case TermKind::cyclical_ties: return "cyclical_ties";
    case TermKind::odeg_pop_sqrt: return "odeg_pop_sqrt";
    case TermKind::edge_cov: return "edge_cov(" + covariate + ")";
    case TermKind::isolate_from_multiple: return "isolate_from_multiple";
    case TermKind::homophily: return "homophily(" + attr + ")";
    case TermKind::heterophily: return "heterophily(" + attr + ", " + group1 + ", " + group2 + ")";
  }
  return {};
}

std::vector<TermSpec> expand_terms(std::span<const TermSpec> terms, const Covariates& covariates) {
  std::vector<TermSpec> out;
  for (const TermSpec& t : terms) {
    if (t.kind == TermKind::homophily) {
      const NodeAttribute* a = covariates.find_attr(t.attr);
      if (a == nullptr) throw InputError("term '" + t.label() + "': unknown node attribute '" + t.attr + "'");
      for (const auto& level : a->levels()) out.push_back(TermSpec::mixing(t.attr, level, level));
    } else if (t.kind == TermKind::heterophily) {
      out.push_back(TermSpec::mixing(t.attr, t.group1, t.group2));
    } else {
      out.push_back(t);
    }
  }
  return out;
}

void ModelSpec::validate() const {
  if (eta_map != EtaMap::identity) {
    throw InputError("curved natural-parameter mappings are not supported; use the identity mapping");
  }
  for (Phase p : {Phase::formation, Phase::dissolution}) {
    if (!theta(p).empty() && theta(p).size() != terms(p).size()) {
      throw InputError(std::string(to_string(p)) + " block has " + std::to_string(terms(p).size()) +
                       " terms but " + std::to_string(theta(p).size()) + " coefficients");
    }
  }
}

ModelSpec expand_model(const ModelSpec& model, const Covariates& covariates) {
  model.validate();
  ModelSpec out;
  out.eta_map = model.eta_map;
  for (Phase p : {Phase::formation, Phase::dissolution}) {
    const auto& terms = model.terms(p);
    const auto& theta = model.theta(p);
    for (std::size_t k = 0; k < terms.size(); ++k) {
      const TermSpec one[] = {terms[k]};
      for (auto& t : expand_terms(one, covariates)) {
        out.terms(p).push_back(t);
        if (!theta.empty()) out.theta(p).push_back(theta[k]);
      }
    }
  }
  return out;
}

namespace {

PhaseStatistics BindSingle(const TermSpec& term, Phase phase, const Network& y,
                           const Covariates& covariates) {
  const TermSpec one[] = {term};
  return PhaseStatistics(phase, one, covariates, y.size(), y.directed());
}

}  // namespace

std::vector<double> evaluate(const TermSpec& term, const Network& y, const Network& y_prev,
                             const Covariates& covariates) {
  if (!same_shape(y, y_prev)) throw InputError("evaluate: networks differ in size or directedness");
  const Phase phase = term.explicitly_dynamic() ? Phase::dissolution : Phase::formation;
  return BindSingle(term, phase, y, covariates).evaluate(y, y_prev);
}

std::vector<double> change_score(const TermSpec& term, Phase phase, const Network& y,
                                 const Network& y_prev, Dyad dyad, const Covariates& covariates) {
  if (!same_shape(y, y_prev)) throw InputError("change_score: networks differ in size or directedness");
  if (!y.is_valid_dyad(dyad)) throw InputError("change_score: invalid dyad");
  const Dyad d = canonical(dyad, y.directed());
  const bool in_prev = y_prev.has(d);
  if (phase == Phase::formation && in_prev) {
    throw InputError("change_score: formation can only toggle dyads empty in the previous network");
  }
  if (phase == Phase::dissolution && !in_prev) {
    throw InputError("change_score: dissolution can only toggle ties of the previous network");
  }
  const PhaseStatistics stats = BindSingle(term, phase, y, covariates);
  std::vector<double> out(stats.size());
  stats.change(y, y_prev, d, out);
  return out;
}

}  // namespace stergm
