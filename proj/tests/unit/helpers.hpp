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

// Generators and brute-force reference implementations for the tests. The
// references work on dense 0/1 matrices and follow the term definitions
// literally, sharing no code with the library's statistics.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "stergm/covariates.hpp"
#include "stergm/network.hpp"
#include "stergm/rng.hpp"
#include "stergm/terms.hpp"

namespace testing {

using stergm::Covariates;
using stergm::Dyad;
using stergm::Network;
using stergm::Phase;
using stergm::Rng;
using stergm::TermKind;
using stergm::TermSpec;

using Matrix = std::vector<std::vector<int>>;

inline Network RandomNetwork(Rng& rng, int n, bool directed, double p) {
  Network y(n, directed);
  std::bernoulli_distribution coin(p);
  for (const Dyad& d : y.all_dyads()) {
    if (coin(rng)) y.add(d);
  }
  return y;
}

inline double RandomDensity(Rng& rng) { return std::uniform_real_distribution<double>(0.05, 0.6)(rng); }

inline std::vector<int> RandomPermutation(Rng& rng, int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

/// "sex" (F/M, both present), "grade" (3 levels) and a real dyad covariate "x".
inline Covariates RandomCovariates(Rng& rng, int n, bool directed) {
  Covariates cov;
  stergm::NodeAttribute sex{"sex", {}};
  stergm::NodeAttribute grade{"grade", {}};
  std::uniform_int_distribution<int> g3(1, 3);
  for (int i = 0; i < n; ++i) {
    sex.values.push_back(i == 0 ? "F" : i == 1 ? "M" : (rng() % 2 ? "F" : "M"));
    grade.values.push_back(i < 3 ? std::to_string(i + 1) : std::to_string(g3(rng)));
  }
  cov.node_attrs = {sex, grade};
  stergm::DyadCovariate x;
  x.name = "x";
  x.n = n;
  x.x.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0);
  std::uniform_real_distribution<double> u(-1.0, 2.0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (!directed && j < i) {
        x.x[static_cast<std::size_t>(i * n + j)] = x.x[static_cast<std::size_t>(j * n + i)];
      } else {
        x.x[static_cast<std::size_t>(i * n + j)] = u(rng);
      }
    }
  }
  cov.dyad_covs = {x};
  return cov;
}

/// Every catalog term usable for this network type and phase.
inline std::vector<TermSpec> Catalog(bool directed, Phase phase) {
  std::vector<TermSpec> terms = {TermSpec::edges(),
                                 TermSpec::mixing("sex", "F", "M"),
                                 TermSpec::mixing("sex", "M", "M"),
                                 TermSpec::mixing("grade", "1", "3"),
                                 TermSpec::transitive_ties(),
                                 TermSpec::cyclical_ties(),
                                 TermSpec::odeg_pop_sqrt(),
                                 TermSpec::edge_cov("x")};
  if (directed) {
    terms.push_back(TermSpec::reciprocity());
  } else {
    for (int d : {0, 1, 2, 3}) terms.push_back(TermSpec::degree_count(d));
  }
  if (phase == Phase::dissolution) terms.push_back(TermSpec::isolate_from_multiple());
  return terms;
}

inline Matrix Dense(const Network& y) {
  const int n = y.size();
  Matrix a(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = y.has(i, j) ? 1 : 0;
    }
  }
  return a;
}

/// Reference value of one term, straight from its definition.
inline double BruteForce(const TermSpec& term, const Network& y, const Network& prev, const Covariates& cov) {
  const int n = y.size();
  const bool directed = y.directed();
  const Matrix a = Dense(y);
  auto A = [&](int i, int j) { return a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; };
  // Ordered pairs for directed networks, i < j for undirected.
  auto each_tie = [&](auto&& f) {
    for (int i = 0; i < n; ++i) {
      for (int j = directed ? 0 : i + 1; j < n; ++j) {
        if (i != j && A(i, j)) f(i, j);
      }
    }
  };
  auto deg = [&](int v) {
    int d = 0;
    for (int k = 0; k < n; ++k) d += A(v, k) + (directed ? A(k, v) : 0);
    return d;
  };
  double total = 0.0;
  switch (term.kind) {
    case TermKind::edges:
      each_tie([&](int, int) { total += 1; });
      break;
    case TermKind::mixing: {
      const auto& vals = cov.find_attr(term.attr)->values;
      auto in = [&](int v, const std::string& g) { return vals[static_cast<std::size_t>(v)] == g; };
      each_tie([&](int i, int j) {
        const bool fwd = in(i, term.group1) && in(j, term.group2);
        const bool back = in(j, term.group1) && in(i, term.group2);
        total += directed ? fwd : (fwd || back);
      });
      break;
    }
    case TermKind::degree:
      for (int v = 0; v < n; ++v) total += deg(v) == term.degree;
      break;
    case TermKind::reciprocity:
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) total += A(i, j) * A(j, i);
      }
      break;
    case TermKind::transitive_ties:
      // Σ y_ij max_k y_ik y_kj; undirected: ties with a shared partner
      each_tie([&](int i, int j) {
        int m = 0;
        for (int k = 0; k < n; ++k) {
          if (k != i && k != j) m = std::max(m, A(i, k) * A(k, j));
        }
        total += m;
      });
      break;
    case TermKind::cyclical_ties:
      // Σ y_ij max_k y_jk y_ki
      each_tie([&](int i, int j) {
        int m = 0;
        for (int k = 0; k < n; ++k) {
          if (k != i && k != j) m = std::max(m, A(j, k) * A(k, i));
        }
        total += m;
      });
      break;
    case TermKind::odeg_pop_sqrt:
      if (directed) {
        // Σ y_ij sqrt(in-degree of j)
        for (int i = 0; i < n; ++i) {
          for (int j = 0; j < n; ++j) {
            if (!A(i, j)) continue;
            int indeg = 0;
            for (int k = 0; k < n; ++k) indeg += A(k, j);
            total += std::sqrt(static_cast<double>(indeg));
          }
        }
      } else {
        for (int i = 0; i < n; ++i) {
          for (int j = 0; j < n; ++j) {
            if (A(i, j)) total += std::sqrt(static_cast<double>(deg(j)));
          }
        }
      }
      break;
    case TermKind::edge_cov: {
      const auto* x = cov.find_dyad_cov(term.covariate);
      each_tie([&](int i, int j) { total += x->at(i, j); });
      break;
    }
    case TermKind::isolate_from_multiple: {
      const Matrix p = Dense(prev);
      for (int v = 0; v < n; ++v) {
        int partners = 0;
        for (int k = 0; k < n; ++k) {
          partners += (p[static_cast<std::size_t>(v)][static_cast<std::size_t>(k)] ||
                       p[static_cast<std::size_t>(k)][static_cast<std::size_t>(v)]);
        }
        total += partners >= 2 && deg(v) == 0;
      }
      break;
    }
    case TermKind::homophily:
    case TermKind::heterophily:
      break;
  }
  return total;
}

/// A random phase network reachable from `anchor`.
inline Network RandomPhaseState(Rng& rng, Phase phase, const Network& anchor, double p) {
  Network y = anchor;
  std::bernoulli_distribution coin(p);
  for (const Dyad& d : anchor.all_dyads()) {
    if (phase == Phase::formation && !anchor.has(d) && coin(rng)) y.add(d);
    if (phase == Phase::dissolution && anchor.has(d) && coin(rng)) y.remove(d);
  }
  return y;
}

}  // namespace testing
