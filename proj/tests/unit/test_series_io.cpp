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

#include <filesystem>
#include <fstream>
#include <string>

#include <unistd.h>

#include "helpers.hpp"
#include "stergm/error.hpp"
#include "stergm/series_io.hpp"

namespace fs = std::filesystem;
using namespace stergm;
using namespace testing;

namespace {

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& tag) {
    path = fs::temp_directory_path() / ("stergm_test_" + tag + "_" + std::to_string(::getpid()));
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

void Write(const fs::path& p, const std::string& text) {
  std::ofstream out(p);
  out << text;
}

bool Mentions(const std::vector<std::string>& msgs, const std::string& needle) {
  for (const auto& m : msgs) {
    if (m.find(needle) != std::string::npos) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("two-snapshot manifest loads") {
  TempDir dir("two");
  Write(dir.path / "t0.csv", "tail,head\n1,2\n2,3\n");
  Write(dir.path / "t1.csv", "tail,head\n1,2\n3,1\n");
  Write(dir.path / "m.json", R"({"n": 3, "directed": true, "snapshots": ["t0.csv", "t1.csv"]})");
  const NetworkSeries s = load_series(dir.path / "m.json");
  CHECK(s.networks.size() == 2);
  CHECK(s.transitions() == 1);
  CHECK(s.networks[0].has(0, 1));
  CHECK(s.networks[1].has(2, 0));
  CHECK(!s.networks[1].has(1, 2));
}

TEST_CASE("self-loop in an edge list is rejected") {
  TempDir dir("loop");
  Write(dir.path / "t0.csv", "tail,head\n5,5\n");
  Write(dir.path / "t1.csv", "tail,head\n");
  Write(dir.path / "m.json", R"({"n": 6, "directed": true, "snapshots": ["t0.csv", "t1.csv"]})");
  CHECK_THROWS_AS(load_series(dir.path / "m.json"), InputError);
  try {
    load_series(dir.path / "m.json");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("self-loop") != std::string::npos);
  }
}

TEST_CASE("save then load gives the same series") {
  Rng rng(201);
  for (bool directed : {true, false}) {
    TempDir dir(directed ? "rt_d" : "rt_u");
    NetworkSeries s;
    const int n = 12;
    for (int t = 0; t < 4; ++t) s.networks.push_back(RandomNetwork(rng, n, directed, 0.2));
    s.covariates = RandomCovariates(rng, n, directed);
    const fs::path manifest = save_series(s, dir.path / "out");
    const NetworkSeries back = load_series(manifest);
    REQUIRE(back.networks.size() == s.networks.size());
    for (std::size_t t = 0; t < s.networks.size(); ++t) CHECK(back.networks[t] == s.networks[t]);
    REQUIRE(back.covariates.node_attrs.size() == 2);
    CHECK(back.covariates.find_attr("sex")->values == s.covariates.find_attr("sex")->values);
    CHECK(back.covariates.find_attr("grade")->values == s.covariates.find_attr("grade")->values);
    CHECK(back.covariates.find_dyad_cov("x")->x == s.covariates.find_dyad_cov("x")->x);
  }
}

TEST_CASE("validation lists every violation") {
  TempDir dir("bad");
  Write(dir.path / "t0.csv", "tail,head\n1,2\n4,4\n1,9\n");
  Write(dir.path / "t1.csv", "tail,head\n1,2\n1,2\n");
  Write(dir.path / "t2.csv", "tail,head\n2,1\n");
  Write(dir.path / "m.json",
        R"({"n": 5, "directed": true, "snapshots": ["t0.csv", "t1.csv", {"path": "t2.csv", "n": 4}]})");
  const SeriesValidation v = validate_series(dir.path / "m.json");
  CHECK(!v.ok());
  CHECK(Mentions(v.violations, "self-loop"));
  CHECK(Mentions(v.violations, "out of range"));
  CHECK(Mentions(v.violations, "duplicate"));
  CHECK(Mentions(v.violations, "t2.csv"));
  CHECK(v.violations.size() >= 4);
}

TEST_CASE("undirected lists need tail < head") {
  TempDir dir("undir");
  Write(dir.path / "t0.csv", "tail,head\n2,1\n");
  Write(dir.path / "t1.csv", "tail,head\n1,2\n");
  Write(dir.path / "m.json", R"({"n": 3, "directed": false, "snapshots": ["t0.csv", "t1.csv"]})");
  CHECK(!validate_series(dir.path / "m.json").ok());
}

TEST_CASE("covariate files are checked") {
  TempDir dir("cov");
  Write(dir.path / "t0.csv", "tail,head\n1,2\n");
  Write(dir.path / "t1.csv", "tail,head\n");
  Write(dir.path / "attrs.csv", "node,sex\n1,F\n2,M\n");
  Write(dir.path / "x.csv", "0,1,2\n1,0\n");
  Write(dir.path / "m.json",
        R"({"n": 3, "directed": true, "snapshots": ["t0.csv", "t1.csv"],
            "node_attrs": "attrs.csv", "dyad_covs": {"x": "x.csv"}})");
  const SeriesValidation v = validate_series(dir.path / "m.json");
  CHECK(!v.ok());
  CHECK(Mentions(v.violations, "attrs.csv"));
  CHECK(Mentions(v.violations, "x.csv"));
}

TEST_CASE("valid series reports per-transition counts") {
  TempDir dir("ok");
  Write(dir.path / "t0.csv", "tail,head\n1,2\n2,3\n");
  Write(dir.path / "t1.csv", "tail,head\n1,2\n3,1\n3,2\n");
  Write(dir.path / "m.json", R"({"n": 3, "directed": true, "snapshots": ["t0.csv", "t1.csv"]})");
  const SeriesValidation v = validate_series(dir.path / "m.json");
  REQUIRE(v.ok());
  REQUIRE(v.transitions.size() == 1);
  CHECK(v.transitions[0].formed == 2);
  CHECK(v.transitions[0].dissolved == 1);
  CHECK(v.transitions[0].preserved == 1);
  CHECK(v.transitions[0].free_formation == 4);
  CHECK(v.transitions[0].free_dissolution == 2);
}

TEST_CASE("missing manifest is an input error") {
  CHECK_THROWS_AS(load_series("/nonexistent/manifest.json"), InputError);
  CHECK(!validate_series("/nonexistent/manifest.json").ok());
}
