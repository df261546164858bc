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

#include "stergm/phase_statistics.hpp"

#include <bit>
#include <cmath>

#include "stergm/error.hpp"
#include "stergm/kernels.hpp"

namespace stergm {

namespace {

double PowThreeHalves(int d) {
  const double x = static_cast<double>(d);
  return x * std::sqrt(x);
}

// Number of k with a->k and k->b.
std::size_t TwoPaths(const Network& y, int a, int b) {
  return kernels::active().and_popcount(y.out_row(a).data(), y.in_row(b).data(), y.words_per_row());
}

// Number of k with k->a and b->k.
std::size_t CyclePaths(const Network& y, int a, int b) {
  return kernels::active().and_popcount(y.in_row(a).data(), y.out_row(b).data(), y.words_per_row());
}

// Distinct partners of v in either direction.
int Partners(const Network& y, int v) {
  if (!y.directed()) return y.degree(v);
  const auto out = y.out_row(v);
  const auto in = y.in_row(v);
  int count = 0;
  for (std::size_t w = 0; w < out.size(); ++w) count += std::popcount(out[w] | in[w]);
  return count;
}

// Tie incidences of v: zero exactly when v is isolated.
int Incidence(const Network& y, int v) { return y.degree(v); }

// Indicator change for a pair whose two-path count moves from `count` by `sign`.
int PathIndicatorChange(std::size_t count, int sign) {
  if (sign > 0) return count == 0 ? 1 : 0;
  return count == 1 ? -1 : 0;
}

}  // namespace

PhaseStatistics::PhaseStatistics(Phase phase, std::span<const TermSpec> terms,
                                 const Covariates& covariates, int n, bool directed)
    : phase_(phase), n_(n), directed_(directed), specs_(expand_terms(terms, covariates)) {
  for (const TermSpec& spec : specs_) {
    Bound b;
    b.kind = spec.kind;
    const std::string label = "term '" + spec.label() + "': ";
    switch (spec.kind) {
      case TermKind::edges:
      case TermKind::transitive_ties:
      case TermKind::cyclical_ties:
      case TermKind::odeg_pop_sqrt:
        break;
      case TermKind::mixing: {
        const NodeAttribute* a = covariates.find_attr(spec.attr);
        if (a == nullptr) throw InputError(label + "unknown node attribute '" + spec.attr + "'");
        if (a->values.size() != static_cast<std::size_t>(n)) {
          throw InputError(label + "attribute has the wrong number of values");
        }
        bool seen1 = false;
        bool seen2 = false;
        b.in_group1.resize(a->values.size());
        b.in_group2.resize(a->values.size());
        for (std::size_t i = 0; i < a->values.size(); ++i) {
          b.in_group1[i] = a->values[i] == spec.group1;
          b.in_group2[i] = a->values[i] == spec.group2;
          seen1 = seen1 || b.in_group1[i];
          seen2 = seen2 || b.in_group2[i];
        }
        if (!seen1 || !seen2) {
          throw InputError(label + "group '" + (seen1 ? spec.group2 : spec.group1) +
                           "' does not occur in attribute '" + spec.attr + "'");
        }
        break;
      }
      case TermKind::degree:
        if (directed) throw InputError(label + "defined for undirected networks only");
        if (spec.degree < 0) throw InputError(label + "degree level must be >= 0");
        b.degree = spec.degree;
        break;
      case TermKind::reciprocity:
        if (!directed) throw InputError(label + "defined for directed networks only");
        break;
      case TermKind::edge_cov: {
        const DyadCovariate* c = covariates.find_dyad_cov(spec.covariate);
        if (c == nullptr) throw InputError(label + "unknown dyad covariate '" + spec.covariate + "'");
        if (c->n != n) throw InputError(label + "covariate size does not match the network");
        b.cov = c->x;
        break;
      }
      case TermKind::isolate_from_multiple:
        if (phase != Phase::dissolution) throw InputError(label + "usable in the dissolution phase only");
        break;
      case TermKind::homophily:
      case TermKind::heterophily:
        break;  // expanded above
    }
    terms_.push_back(std::move(b));
  }
}

std::vector<std::string> PhaseStatistics::labels() const {
  std::vector<std::string> out;
  out.reserve(specs_.size());
  for (const auto& s : specs_) out.push_back(s.label());
  return out;
}

std::vector<double> PhaseStatistics::evaluate(const Network& y, const Network& anchor) const {
  std::vector<double> out(size());
  evaluate(y, anchor, out);
  return out;
}

void PhaseStatistics::evaluate(const Network& y, const Network& anchor, std::span<double> out) const {
  for (std::size_t k = 0; k < terms_.size(); ++k) out[k] = Evaluate(terms_[k], y, anchor);
}

void PhaseStatistics::change(const Network& y, const Network& anchor, Dyad d,
                             std::span<double> out) const {
  for (std::size_t k = 0; k < terms_.size(); ++k) out[k] = Change(terms_[k], y, anchor, d);
}

double PhaseStatistics::Evaluate(const Bound& t, const Network& y, const Network& anchor) const {
  const int n = y.size();
  double total = 0.0;
  switch (t.kind) {
    case TermKind::edges:
      return static_cast<double>(y.edge_count());
    case TermKind::mixing:
      for (int i = 0; i < n; ++i) {
        for (int j : y.out_neighbors(i)) {
          const auto ui = static_cast<std::size_t>(i);
          const auto uj = static_cast<std::size_t>(j);
          if (directed_) {
            total += t.in_group1[ui] && t.in_group2[uj];
          } else if (i < j) {
            total += (t.in_group1[ui] && t.in_group2[uj]) || (t.in_group1[uj] && t.in_group2[ui]);
          }
        }
      }
      return total;
    case TermKind::degree:
      for (int i = 0; i < n; ++i) total += y.degree(i) == t.degree;
      return total;
    case TermKind::reciprocity:
      for (int i = 0; i < n; ++i) {
        for (int j : y.out_neighbors(i)) total += (i < j && y.has(j, i));
      }
      return total;
    case TermKind::transitive_ties:
      for (int i = 0; i < n; ++i) {
        for (int j : y.out_neighbors(i)) {
          if (directed_ || i < j) total += TwoPaths(y, i, j) > 0;
        }
      }
      return total;
    case TermKind::cyclical_ties:
      for (int i = 0; i < n; ++i) {
        for (int j : y.out_neighbors(i)) {
          if (directed_) {
            total += CyclePaths(y, i, j) > 0;
          } else if (i < j) {
            total += TwoPaths(y, i, j) > 0;
          }
        }
      }
      return total;
    case TermKind::odeg_pop_sqrt:
      for (int j = 0; j < n; ++j) total += PowThreeHalves(directed_ ? y.in_degree(j) : y.degree(j));
      return total;
    case TermKind::edge_cov:
      for (int i = 0; i < n; ++i) {
        for (int j : y.out_neighbors(i)) {
          if (directed_ || i < j) total += CovAt(t, i, j);
        }
      }
      return total;
    case TermKind::isolate_from_multiple:
      for (int v = 0; v < n; ++v) total += Incidence(y, v) == 0 && Partners(anchor, v) >= 2;
      return total;
    case TermKind::homophily:
    case TermKind::heterophily:
      break;
  }
  return total;
}

double PhaseStatistics::Change(const Bound& t, const Network& y, const Network& anchor, Dyad d) const {
  const int i = d.tail;
  const int j = d.head;
  const int sign = y.has(i, j) ? -1 : 1;
  switch (t.kind) {
    case TermKind::edges:
      return sign;
    case TermKind::mixing: {
      const auto ui = static_cast<std::size_t>(i);
      const auto uj = static_cast<std::size_t>(j);
      bool hit = t.in_group1[ui] && t.in_group2[uj];
      if (!directed_) hit = hit || (t.in_group1[uj] && t.in_group2[ui]);
      return hit ? sign : 0.0;
    }
    case TermKind::degree: {
      int delta = 0;
      for (int v : {i, j}) {
        const int before = y.degree(v);
        delta += (before + sign == t.degree) - (before == t.degree);
      }
      return delta;
    }
    case TermKind::reciprocity:
      return y.has(j, i) ? sign : 0.0;
    case TermKind::transitive_ties:
    case TermKind::cyclical_ties: {
      if (t.kind == TermKind::transitive_ties || !directed_) {
        // pairs whose two-path count uses (i,j): (i,b) via b in out(j), (a,j) via a in in(i)
        int delta = TwoPaths(y, i, j) > 0 ? sign : 0;
        for (int b : y.out_neighbors(j)) {
          if (b != i && y.has(i, b)) delta += PathIndicatorChange(TwoPaths(y, i, b), sign);
        }
        for (int a : y.in_neighbors(i)) {
          if (a != j && y.has(a, j)) delta += PathIndicatorChange(TwoPaths(y, a, j), sign);
        }
        return delta;
      }
      // closing paths through (i,j): (a,i) via a in out(j), (j,b) via b in in(i)
      int delta = CyclePaths(y, i, j) > 0 ? sign : 0;
      for (int a : y.out_neighbors(j)) {
        if (a != i && y.has(a, i)) delta += PathIndicatorChange(CyclePaths(y, a, i), sign);
      }
      for (int b : y.in_neighbors(i)) {
        if (b != j && y.has(j, b)) delta += PathIndicatorChange(CyclePaths(y, j, b), sign);
      }
      return delta;
    }
    case TermKind::odeg_pop_sqrt: {
      if (directed_) {
        const int before = y.in_degree(j);
        return PowThreeHalves(before + sign) - PowThreeHalves(before);
      }
      double delta = 0.0;
      for (int v : {i, j}) {
        const int before = y.degree(v);
        delta += PowThreeHalves(before + sign) - PowThreeHalves(before);
      }
      return delta;
    }
    case TermKind::edge_cov:
      return sign * CovAt(t, i, j);
    case TermKind::isolate_from_multiple: {
      int delta = 0;
      for (int v : {i, j}) {
        if (Partners(anchor, v) < 2) continue;
        const int before = Incidence(y, v);
        delta += (before + sign == 0) - (before == 0);
      }
      return delta;
    }
    case TermKind::homophily:
    case TermKind::heterophily:
      break;
  }
  return 0.0;
}

}  // namespace stergm
