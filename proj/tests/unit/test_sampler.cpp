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

#include <doctest.h>

#include <cmath>
#include <map>
#include <vector>

#include "helpers.hpp"
#include "stergm/error.hpp"
#include "stergm/exact.hpp"
#include "stergm/sampler.hpp"
#include "stergm/simulate.hpp"
#include "stergm/spells.hpp"

using namespace stergm;
using namespace testing;

namespace {

double Ilogit(double x) { return 1.0 / (1.0 + std::exp(-x)); }

PhaseStatistics EdgesOnly(Phase p, int n, bool directed) {
  return PhaseStatistics(p, std::vector<TermSpec>{TermSpec::edges()}, {}, n, directed);
}

double MeanEdges(const PhaseDraws& d) { return d.stats.column_means()[0]; }

// Total variation between sampled state frequencies and exact probabilities.
double TotalVariation(const PhaseSpace& space, const PhaseStatistics& stats, std::span<const double> eta,
                      const SamplerConfig& cfg, const std::vector<double>& probs, std::uint64_t stream_key) {
  std::map<std::uint64_t, double> freq;
  ChainOptions opts;
  opts.stream = StreamId{stream_key};
  opts.visitor = [&](const Network& y, std::span<const double>) { freq[state_code(space, y)] += 1.0; };
  sample_phase(space, stats, eta, cfg, opts);
  double tv = 0.0;
  for (std::size_t c = 0; c < probs.size(); ++c) {
    const auto it = freq.find(c);
    const double f = it == freq.end() ? 0.0 : it->second / static_cast<double>(cfg.n_draws);
    tv += std::abs(f - probs[c]);
  }
  return 0.5 * tv;
}

ModelSpec EdgesModel(double plus, double minus) {
  ModelSpec m;
  m.formation_terms = {TermSpec::edges()};
  m.dissolution_terms = {TermSpec::edges()};
  m.theta_plus = {plus};
  m.theta_minus = {minus};
  return m;
}

}  // namespace

TEST_CASE("edges-only chains match closed forms") {
  SamplerConfig cfg;
  cfg.n_draws = 20000;
  cfg.seed = 7;
  const int n = 3;
  const PhaseSpace empty(Phase::formation, Network(n, true));
  const auto form = EdgesOnly(Phase::formation, n, true);
  // six free dyads, each on with probability ilogit(theta)
  for (double theta : {0.0, std::log(3.0), -1.2}) {
    const double p = Ilogit(theta);
    const double sd = std::sqrt(6.0 * p * (1.0 - p) / static_cast<double>(cfg.n_draws));
    const double eta[] = {theta};
    CHECK(std::abs(MeanEdges(sample_phase(empty, form, eta, cfg)) - 6.0 * p) < 6.0 * sd);
  }
  CHECK(Ilogit(std::log(3.0)) == doctest::Approx(0.75));

  Rng rng(401);
  const Network prev = RandomNetwork(rng, 8, false, 0.5);
  const PhaseSpace diss(Phase::dissolution, prev);
  const auto dstat = EdgesOnly(Phase::dissolution, 8, false);
  const double m = static_cast<double>(prev.edge_count());
  for (double theta : {1.5, -0.5}) {
    const double p = Ilogit(theta);
    const double sd = std::sqrt(m * p * (1.0 - p) / static_cast<double>(cfg.n_draws));
    const double eta[] = {theta};
    CHECK(std::abs(MeanEdges(sample_phase(diss, dstat, eta, cfg)) - m * p) < 6.0 * sd);
  }
}

TEST_CASE("sampled state distribution agrees with enumeration") {
  Rng rng(402);
  for (Proposal proposal : {Proposal::uniform_free_dyad, Proposal::tnt}) {
    for (Phase phase : {Phase::formation, Phase::dissolution}) {
      const bool directed = phase == Phase::formation;
      const int n = directed ? 3 : 5;
      const Covariates cov = RandomCovariates(rng, n, directed);
      const Network anchor = phase == Phase::formation ? RandomNetwork(rng, n, directed, 0.2)
                                                       : RandomNetwork(rng, n, directed, 0.7);
      const PhaseSpace space(phase, anchor);
      const auto terms = Catalog(directed, phase);
      const PhaseStatistics stats(phase, terms, cov, n, directed);
      std::vector<double> eta(terms.size());
      for (auto& e : eta) e = std::uniform_real_distribution<double>(-0.6, 0.6)(rng);
      const ExactPhase exact = exact_phase(space, stats, eta, true);
      SamplerConfig cfg;
      cfg.n_draws = 40000;
      cfg.proposal = proposal;
      cfg.seed = 11;
      const double tv = TotalVariation(space, stats, eta, cfg, exact.probabilities, 1);
      INFO("phase ", to_string(phase), " tnt ", proposal == Proposal::tnt, " states ", exact.probabilities.size());
      CHECK(tv < 0.05);
    }
  }
}

TEST_CASE("degree cap restricts draws to the capped support") {
  const int n = 4;
  const Network anchor = Network::from_edges(n, true, std::vector<Dyad>{{0, 1}});
  const PhaseSpace space(Phase::formation, anchor);
  const auto stats = EdgesOnly(Phase::formation, n, true);
  const double eta[] = {0.3};
  SamplerConfig cfg;
  cfg.n_draws = 40000;
  cfg.max_out_degree = 1;
  cfg.seed = 5;
  // capped support: each node keeps at most one out-tie; node 0 is already full
  const ExactPhase all = exact_phase(space, stats, eta, true);
  std::vector<double> capped(all.probabilities.size(), 0.0);
  double z = 0.0;
  const auto& free = space.free_dyads();
  for (std::size_t c = 0; c < capped.size(); ++c) {
    Network y = anchor;
    for (std::size_t f = 0; f < free.size(); ++f) {
      if ((c >> f) & 1U) y.add(free[f]);
    }
    bool ok = true;
    for (int v = 0; v < n; ++v) ok = ok && y.out_degree(v) <= 1;
    if (ok) {
      capped[c] = all.probabilities[c];
      z += capped[c];
    }
  }
  for (auto& p : capped) p /= z;
  bool within = true;
  ChainOptions opts;
  opts.visitor = [&](const Network& y, std::span<const double>) {
    for (int v = 0; v < n; ++v) within = within && y.out_degree(v) <= 1;
  };
  sample_phase(space, stats, eta, cfg, opts);
  CHECK(within);
  CHECK(TotalVariation(space, stats, eta, cfg, capped, 2) < 0.04);

  cfg.max_out_degree = 0;
  CHECK_THROWS_AS(sample_phase(space, stats, eta, cfg), InfeasibleConstraint);
  cfg.max_out_degree = -1;
  CHECK_THROWS_AS(sample_phase(space, stats, eta, cfg), InputError);
}

TEST_CASE("every draw respects the phase containment") {
  Rng rng(403);
  for (Phase phase : {Phase::formation, Phase::dissolution}) {
    const Network anchor = RandomNetwork(rng, 10, true, 0.3);
    const PhaseSpace space(phase, anchor);
    const auto terms = Catalog(true, phase);
    const Covariates cov = RandomCovariates(rng, 10, true);
    const PhaseStatistics stats(phase, terms, cov, 10, true);
    std::vector<double> eta(terms.size(), 0.1);
    SamplerConfig cfg;
    cfg.n_draws = 300;
    cfg.proposal = Proposal::tnt;
    bool inside = true;
    bool stats_match = true;
    ChainOptions opts;
    opts.visitor = [&](const Network& y, std::span<const double> g) {
      inside = inside && space.contains(y);
      const auto ref = stats.evaluate(y, anchor);
      for (std::size_t k = 0; k < ref.size(); ++k) stats_match = stats_match && std::abs(ref[k] - g[k]) < 1e-9;
    };
    sample_phase(space, stats, eta, cfg, opts);
    CHECK(inside);
    CHECK(stats_match);
  }
}

TEST_CASE("phases without free dyads return the anchor") {
  Network full(4, true);
  for (const Dyad& d : full.all_dyads()) full.add(d);
  const double eta[] = {1.0};
  SamplerConfig cfg;
  cfg.n_draws = 5;
  const auto f = sample_phase(PhaseSpace(Phase::formation, full), EdgesOnly(Phase::formation, 4, true), eta, cfg);
  CHECK(f.last == full);
  CHECK(f.stats.column_means()[0] == 12);
  const auto d = sample_phase(PhaseSpace(Phase::dissolution, Network(4, true)),
                              EdgesOnly(Phase::dissolution, 4, true), eta, cfg);
  CHECK(d.last.edge_count() == 0);
}

TEST_CASE("seeds and streams determine the chain") {
  Rng rng(404);
  const Network anchor = RandomNetwork(rng, 12, true, 0.2);
  const PhaseSpace space(Phase::formation, anchor);
  const auto stats = EdgesOnly(Phase::formation, 12, true);
  const double eta[] = {-1.0};
  SamplerConfig cfg;
  cfg.n_draws = 50;
  cfg.seed = 99;
  ChainOptions a;
  a.stream = StreamId{1, 2};
  const auto x = sample_phase(space, stats, eta, cfg, a);
  const auto y = sample_phase(space, stats, eta, cfg, a);
  CHECK(x.stats.row(49) == y.stats.row(49));
  CHECK(x.last == y.last);
  ChainOptions b;
  b.stream = StreamId{1, 3};
  CHECK(!(sample_phase(space, stats, eta, cfg, b).last == x.last));
  cfg.seed = 100;
  CHECK(!(sample_phase(space, stats, eta, cfg, a).last == x.last));
}

TEST_CASE("sampler settings are validated") {
  SamplerConfig cfg;
  cfg.n_draws = 0;
  CHECK_THROWS_AS(cfg.validate(), InputError);
  cfg.n_draws = 1;
  cfg.interval = 0;
  CHECK_THROWS_AS(cfg.validate(), InputError);
  cfg.interval.reset();
  cfg.burn_in = 0;
  CHECK_THROWS_AS(cfg.validate(), InputError);
  cfg.burn_in.reset();
  CHECK(cfg.burn_in_for(7) == 70);
  CHECK(cfg.interval_for(7) == 7);
  const PhaseSpace space(Phase::formation, Network(3, true));
  const double nan_eta[] = {std::nan("")};
  CHECK_THROWS_AS(sample_phase(space, EdgesOnly(Phase::formation, 3, true), nan_eta, cfg), InputError);
  const double two[] = {0.0, 0.0};
  CHECK_THROWS_AS(sample_phase(space, EdgesOnly(Phase::formation, 3, true), two, cfg), InputError);
}

TEST_CASE("extreme coefficients freeze or flip every dyad") {
  Rng rng(405);
  const Network prev = RandomNetwork(rng, 10, true, 0.3);
  SamplerConfig cfg;
  cfg.seed = 3;
  const StergmModel stay(EdgesModel(-40.0, 40.0), {}, 10, true);
  CHECK(simulate_step(prev, stay, cfg) == prev);
  const StergmModel flip(EdgesModel(40.0, -40.0), {}, 10, true);
  const Network next = simulate_step(prev, flip, cfg);
  for (const Dyad& d : prev.all_dyads()) CHECK(next.has(d) == !prev.has(d));
}

TEST_CASE("zero coefficients give the uniform law over next networks") {
  // n = 3 undirected: eight possible next networks, each with probability 1/8
  const Network prev = Network::from_edges(3, false, std::vector<Dyad>{{0, 1}});
  const StergmModel zero(EdgesModel(0.0, 0.0), {}, 3, false);
  SamplerConfig cfg;
  cfg.seed = 21;
  const std::size_t reps = 8000;
  std::map<std::uint64_t, double> freq;
  for (std::size_t t = 1; t <= reps; ++t) {
    const Network y = simulate_step(prev, zero, cfg, t);
    std::uint64_t code = 0;
    const auto all = y.all_dyads();
    for (std::size_t k = 0; k < all.size(); ++k) code |= (y.has(all[k]) ? 1U : 0U) << k;
    freq[code] += 1.0;
  }
  CHECK(freq.size() == 8);
  const double expect = static_cast<double>(reps) / 8.0;
  const double sd = std::sqrt(static_cast<double>(reps) * (1.0 / 8.0) * (7.0 / 8.0));
  for (const auto& [code, count] : freq) CHECK(std::abs(count - expect) < 5.0 * sd);
}

TEST_CASE("a one-step series is a single simulated step") {
  Rng rng(406);
  const Network y0 = RandomNetwork(rng, 15, false, 0.1);
  const StergmModel m(EdgesModel(-2.0, 1.0), {}, 15, false);
  SamplerConfig cfg;
  cfg.seed = 8;
  const NetworkSeries s = simulate_series(y0, m, 1, cfg);
  REQUIRE(s.networks.size() == 2);
  CHECK(s.networks[0] == y0);
  CHECK(s.networks[1] == simulate_step(y0, m, cfg, 1));
  CHECK_THROWS_AS(simulate_series(y0, m, 0, cfg), InputError);
  const auto d = simulate_transition(y0, m, cfg, 1);
  CHECK(apply_transition(y0, d) == s.networks[1]);
  CHECK(is_subset(y0, d.formation));
  CHECK(is_subset(d.dissolution, y0));
}

TEST_CASE("edges-only dissolution gives a constant tie hazard") {
  // keep probability 0.8, so spells end with hazard 0.2 at every age
  const StergmModel m(EdgesModel(-4.0, std::log(4.0)), {}, 40, false);
  Rng rng(407);
  SamplerConfig cfg;
  cfg.seed = 13;
  const NetworkSeries s = simulate_series(RandomNetwork(rng, 40, false, 0.05), m, 60, cfg);
  const SpellSummary spells = tie_spells(s.networks);
  const auto h = spells.hazard_by_age(4);
  for (double x : h) CHECK(x == doctest::Approx(0.2).epsilon(0.25));
  CHECK(spells.mean_completed() == doctest::Approx(5.0).epsilon(0.2));
}

TEST_CASE("tie spells on a hand-built panel") {
  auto net = [](std::vector<Dyad> e) { return Network::from_edges(3, true, e); };
  // (0,1): on, on, off, on  -> one completed spell of 2, one censored of 1
  // (1,2): off, on, on, off -> completed spell of 2
  // (2,0): on throughout    -> censored spell of 4
  const std::vector<Network> panel = {net({{0, 1}, {2, 0}}), net({{0, 1}, {1, 2}, {2, 0}}),
                                      net({{1, 2}, {2, 0}}), net({{0, 1}, {2, 0}})};
  const SpellSummary s = tie_spells(panel);
  CHECK(s.completed.size() == 2);
  CHECK(s.mean_completed() == 2.0);
  CHECK(s.censored == 2);
  const auto h = s.hazard_by_age(4);
  // age 1: three at risk (two completed, the length-4 censored), none end
  CHECK(h[0] == 0.0);
  // age 2: same three at risk, two end
  CHECK(h[1] == doctest::Approx(2.0 / 3.0));
  CHECK(h[2] == 0.0);
  CHECK(h[3] == 0.0);
}
