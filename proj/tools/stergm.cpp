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

// stergm: simulate, fit and validate network panels.
//
// Exit codes: 0 success, 2 bad input or configuration, 3 the model could
// not be fitted (degenerate, non-convergent, singular) or simulated.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "stergm/error.hpp"
#include "stergm/estimation.hpp"
#include "stergm/model_file.hpp"
#include "stergm/report.hpp"
#include "stergm/series_io.hpp"
#include "stergm/simulate.hpp"
#include "stergm/spells.hpp"

namespace fs = std::filesystem;
using namespace stergm;

namespace {

constexpr int kExitInput = 2;
constexpr int kExitModel = 3;

struct SamplerOptions {
  std::optional<std::size_t> burn_in;
  std::optional<std::size_t> interval;
  std::string proposal = "uniform";
  std::optional<int> max_out_degree;
  std::uint64_t seed = 1;

  void add(CLI::App* app) {
    app->add_option("--seed", seed, "Random seed")->capture_default_str();
    app->add_option("--burn-in", burn_in, "Proposals discarded before the first draw (default 10 x free dyads)");
    app->add_option("--interval", interval, "Proposals between draws (default: free dyads)");
    app->add_option("--proposal", proposal, "uniform or tnt")
        ->check(CLI::IsMember({"uniform", "tnt"}))
        ->capture_default_str();
    app->add_option("--max-out-degree", max_out_degree, "Formation never exceeds this out-degree");
  }

  SamplerConfig config() const {
    SamplerConfig cfg;
    cfg.burn_in = burn_in;
    cfg.interval = interval;
    cfg.proposal = proposal == "tnt" ? Proposal::tnt : Proposal::uniform_free_dyad;
    cfg.max_out_degree = max_out_degree;
    cfg.seed = seed;
    return cfg;
  }
};

struct SimulateOptions {
  std::string model;
  std::string init_series;
  std::string init_network;
  int n = 0;
  bool directed = false;
  double density = 0.0;
  std::size_t steps = 10;
  std::string out;
  std::string node_attrs;
  std::vector<std::string> dyad_covs;
  SamplerOptions sampler;
};

struct FitOptions {
  std::string series;
  std::string model;
  std::string heterogeneous = "none";
  bool ladder = false;
  std::string out;
  std::size_t draws = 2000;
  std::size_t bridge_draws = 1000;
  std::size_t bridge_points = 16;
  std::size_t max_iterations = 30;
  std::size_t chains = 4;
  unsigned threads = 0;
  SamplerOptions sampler;
};

struct Verbosity {
  bool quiet = false;
  bool verbose = false;
};

Covariates ReadCovariates(const SimulateOptions& o, int n) {
  Covariates cov;
  if (!o.node_attrs.empty()) cov.node_attrs = read_node_attributes(o.node_attrs, n);
  for (const auto& spec : o.dyad_covs) {
    const auto eq = spec.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == spec.size()) {
      throw InputError("--dyad-cov expects name=path, got '" + spec + "'");
    }
    cov.dyad_covs.push_back(read_dyad_covariate(spec.substr(0, eq), spec.substr(eq + 1), n));
  }
  return cov;
}

Network RandomNetwork(int n, bool directed, double density, std::uint64_t seed) {
  if (!(density >= 0.0 && density <= 1.0)) throw InputError("--density must lie in [0, 1]");
  Network y(n, directed);
  Rng rng = make_rng(seed, StreamId{stream::kInitial});
  std::bernoulli_distribution coin(density);
  for (const Dyad& d : y.all_dyads()) {
    if (coin(rng)) y.add(d);
  }
  return y;
}

void PrintStats(std::ostream& os, const char* name, const PhaseStatistics& stats, const Network& y,
                const Network& prev) {
  if (stats.empty()) return;
  const auto labels = stats.labels();
  const auto g = stats.evaluate(y, prev);
  os << "  " << name << ":";
  for (std::size_t k = 0; k < g.size(); ++k) os << (k ? ", " : " ") << labels[k] << " = " << g[k];
  os << "\n";
}

int RunSimulate(const SimulateOptions& o, const Verbosity& v) {
  ModelSpec model = load_model(o.model);
  model.validate();
  NetworkSeries start;
  if (!o.init_series.empty()) {
    start = load_series(o.init_series);
  } else {
    if (o.n < 1) throw InputError("give --init-series, or --n for a fresh network");
    start.networks.push_back(o.init_network.empty() ? RandomNetwork(o.n, o.directed, o.density, o.sampler.seed)
                                                    : read_edge_list(o.init_network, o.n, o.directed));
  }
  const Network& y0 = start.networks.back();
  Covariates cov = start.covariates;
  const Covariates extra = ReadCovariates(o, y0.size());
  cov.node_attrs.insert(cov.node_attrs.end(), extra.node_attrs.begin(), extra.node_attrs.end());
  cov.dyad_covs.insert(cov.dyad_covs.end(), extra.dyad_covs.begin(), extra.dyad_covs.end());
  cov.validate(y0.size(), y0.directed());

  const StergmModel bound(model, cov, y0.size(), y0.directed());
  const SamplerConfig cfg = o.sampler.config();
  cfg.validate();
  const NetworkSeries series = simulate_series(y0, bound, o.steps, cfg, cov);

  if (!v.quiet) {
    std::cout << "start: " << y0.edge_count() << " ties on " << y0.size() << " nodes\n";
    for (std::size_t t = 1; t < series.networks.size(); ++t) {
      const Network& prev = series.networks[t - 1];
      const Network& next = series.networks[t];
      const auto s = summarize_transition(prev, next);
      std::cout << "step " << t << ": formed " << s.formed << ", dissolved " << s.dissolved << ", ties "
                << next.edge_count() << "\n";
      const auto d = decompose_transition(prev, next);
      PrintStats(std::cout, "formation", bound.statistics(Phase::formation), d.formation, prev);
      PrintStats(std::cout, "dissolution", bound.statistics(Phase::dissolution), d.dissolution, prev);
    }
  }
  const SpellSummary spells = tie_spells(series.networks);
  std::cout << "mean completed spell length: " << spells.mean_completed() << " (" << spells.completed.size()
            << " completed, " << spells.censored << " censored)\n";
  if (!o.out.empty()) {
    const fs::path manifest = save_series(series, o.out);
    if (!v.quiet) std::cout << "wrote " << manifest.string() << "\n";
  }
  return 0;
}

int RunFit(const FitOptions& o, const Verbosity& v) {
  const NetworkSeries series = load_series(o.series);
  const ModelSpec model = load_model(o.model);
  model.validate();
  FitConfig cfg;
  cfg.sampler = o.sampler.config();
  cfg.sample_size = o.draws;
  cfg.bridge_sample_size = o.bridge_draws;
  cfg.bridge_points = o.bridge_points;
  cfg.max_iterations = o.max_iterations;
  cfg.chains = o.chains;
  cfg.threads = o.threads;
  if (v.verbose) cfg.progress = [](const std::string& line) { std::cerr << line << "\n"; };
  cfg.validate();
  const Heterogeneity scheme = parse_heterogeneity(o.heterogeneous);

  const FitResult fit = o.ladder ? analysis_of_deviance(series, model, cfg, scheme)
                                 : fit_time_heterogeneous(series, model, cfg, scheme);
  // quiet with --out leaves the results in the file only
  if (!v.quiet || o.out.empty()) {
    std::cout << format_coefficients(fit) << "\n" << format_deviance(fit.deviance_table);
  }
  if (!o.out.empty()) {
    std::ofstream out(o.out);
    if (!out) throw InputError("cannot write " + o.out);
    out << to_json(fit).dump(2) << "\n";
    if (!v.quiet) std::cout << "wrote " << o.out << "\n";
  }
  return 0;
}

int RunValidate(const std::string& manifest, const Verbosity& v) {
  const SeriesValidation result = validate_series(manifest);
  if (!result.ok()) {
    std::cerr << result.violations.size() << " problem(s) in " << manifest << ":\n";
    for (const auto& msg : result.violations) std::cerr << "  " << msg << "\n";
    return kExitInput;
  }
  if (!v.quiet) {
    std::cout << "ok: " << result.transitions.size() << " transitions\n";
    for (std::size_t t = 0; t < result.transitions.size(); ++t) {
      const auto& s = result.transitions[t];
      std::cout << "  " << t << " -> " << t + 1 << ": formed " << s.formed << " of " << s.free_formation
                << ", dissolved " << s.dissolved << " of " << s.free_dissolution << ", preserved "
                << s.preserved << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Separable temporal ERGMs: simulate panels, fit formation and dissolution models"};
  app.require_subcommand(1);
  app.fallthrough();
  Verbosity verbosity;
  app.add_flag("-q,--quiet", verbosity.quiet, "Only print results and errors");
  app.add_flag("-v,--verbose", verbosity.verbose, "Print fitting progress to stderr");

  SimulateOptions sim;
  auto* simulate = app.add_subcommand("simulate", "Simulate a panel forward from a starting network");
  simulate->add_option("--model", sim.model, "Model file with coefficients")->required()->check(CLI::ExistingFile);
  simulate->add_option("--init-series", sim.init_series, "Start from the last snapshot of this manifest")
      ->check(CLI::ExistingFile);
  simulate->add_option("--init-network", sim.init_network, "Start from this edge list (needs --n)")
      ->check(CLI::ExistingFile);
  simulate->add_option("--n", sim.n, "Number of nodes");
  simulate->add_flag("--directed", sim.directed, "Directed network");
  simulate->add_option("--density", sim.density, "Tie probability of a fresh random start")->capture_default_str();
  simulate->add_option("--steps", sim.steps, "Transitions to simulate")->capture_default_str();
  simulate->add_option("--out", sim.out, "Directory for the simulated series");
  simulate->add_option("--node-attrs", sim.node_attrs, "Node attribute CSV")->check(CLI::ExistingFile);
  simulate->add_option("--dyad-cov", sim.dyad_covs, "Dyadic covariate as name=path (repeatable)");
  sim.sampler.add(simulate);

  FitOptions fitopt;
  auto* fit = app.add_subcommand("fit", "Fit formation and dissolution models to a panel");
  fit->add_option("--series", fitopt.series, "Series manifest")->required()->check(CLI::ExistingFile);
  fit->add_option("--model", fitopt.model, "Model file")->required()->check(CLI::ExistingFile);
  fit->add_option("--heterogeneous", fitopt.heterogeneous, "none, edges or full")
      ->check(CLI::IsMember({"none", "edges", "full"}))
      ->capture_default_str();
  fit->add_flag("--ladder", fitopt.ladder, "Fit the nested model sequence for an analysis of deviance");
  fit->add_option("--out", fitopt.out, "Write the fit as JSON");
  fit->add_option("--draws", fitopt.draws, "Draws per transition per iteration")->capture_default_str();
  fit->add_option("--bridge-draws", fitopt.bridge_draws, "Draws per transition per bridge point")->capture_default_str();
  fit->add_option("--bridge-points", fitopt.bridge_points, "Bridge points")->capture_default_str();
  fit->add_option("--max-iterations", fitopt.max_iterations, "MCMC-MLE iterations")->capture_default_str();
  fit->add_option("--chains", fitopt.chains, "Chains per transition")->capture_default_str();
  fit->add_option("--threads", fitopt.threads, "Worker threads (default: STERGM_THREADS or 1)");
  fitopt.sampler.add(fit);

  std::string manifest;
  auto* validate = app.add_subcommand("validate", "Check a series manifest and its files");
  validate->add_option("manifest", manifest, "Series manifest")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*simulate) return RunSimulate(sim, verbosity);
    if (*fit) return RunFit(fitopt, verbosity);
    return RunValidate(manifest, verbosity);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ModelError& e) {
    std::cerr << "error: " << e.what() << "\n";
    std::cerr << "diagnostics:\n";
    if (*fit) {
      std::cerr << "  series: " << fitopt.series << "\n  model: " << fitopt.model
                << "\n  heterogeneity: " << fitopt.heterogeneous << "\n  seed: " << fitopt.sampler.seed
                << "\n  draws per transition: " << fitopt.draws << "\n";
    } else {
      std::cerr << "  model: " << sim.model << "\n  seed: " << sim.sampler.seed << "\n";
    }
    std::cerr << "  try a simpler model, more draws (--draws) or more iterations (--max-iterations)\n";
    return kExitModel;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitModel;
  }
}
