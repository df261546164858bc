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

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>
#include <string>

#include <json.hpp>

#include "stergm/series_io.hpp"
#include "stergm/transition.hpp"

namespace fs = std::filesystem;
using namespace stergm;

namespace {

const fs::path kData = STERGM_DATA_DIR;

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& tag) {
    path = fs::temp_directory_path() / ("stergm_cli_" + tag + "_" + std::to_string(::getpid()));
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

std::string Slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void Write(const fs::path& p, const std::string& text) {
  std::ofstream out(p);
  out << text;
}

Run Cli(const std::string& args, const fs::path& scratch) {
  const fs::path out = scratch / "stdout.txt";
  const fs::path err = scratch / "stderr.txt";
  const std::string cmd = std::string("'") + STERGM_CLI_PATH + "' " + args + " >'" + out.string() + "' 2>'" +
                          err.string() + "'";
  const int status = std::system(cmd.c_str());
  Run r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = Slurp(out);
  r.err = Slurp(err);
  return r;
}

const char* kEdgesModel = "[formation]\nedges = -3.5\n[dissolution]\nedges = 1.5\n";

}  // namespace

TEST_CASE("bundled example validates") {
  TempDir dir("validate");
  const Run r = Cli("validate " + (kData / "classroom" / "manifest.json").string(), dir.path);
  CHECK(r.code == 0);
  CHECK(r.out.find("ok: 3 transitions") != std::string::npos);
}

TEST_CASE("validate summary counts match a recount") {
  TempDir dir("recount");
  const fs::path manifest = kData / "classroom" / "manifest.json";
  const Run r = Cli("validate " + manifest.string(), dir.path);
  REQUIRE(r.code == 0);
  const NetworkSeries s = load_series(manifest);
  const std::regex line(R"((\d+) -> (\d+): formed (\d+) of (\d+), dissolved (\d+) of (\d+), preserved (\d+))");
  std::size_t seen = 0;
  for (auto it = std::sregex_iterator(r.out.begin(), r.out.end(), line); it != std::sregex_iterator(); ++it) {
    const auto& m = *it;
    const std::size_t t = std::stoul(m[2]);
    const Network& prev = s.networks[t - 1];
    const auto d = decompose_transition(prev, s.networks[t]);
    CHECK(std::stoul(m[3]) == d.formation.edge_count() - prev.edge_count());
    CHECK(std::stoul(m[4]) == prev.dyad_count() - prev.edge_count());
    CHECK(std::stoul(m[5]) == prev.edge_count() - d.dissolution.edge_count());
    CHECK(std::stoul(m[6]) == prev.edge_count());
    CHECK(std::stoul(m[7]) == d.dissolution.edge_count());
    ++seen;
  }
  CHECK(seen == 3);
}

TEST_CASE("validate lists a snapshot with a different node count") {
  TempDir dir("badn");
  Write(dir.path / "a.csv", "tail,head\n1,2\n");
  Write(dir.path / "b.csv", "tail,head\n1,2\n");
  Write(dir.path / "m.json", R"({"n": 4, "directed": true, "snapshots": ["a.csv", {"path": "b.csv", "n": 5}]})");
  const Run r = Cli("validate " + (dir.path / "m.json").string(), dir.path);
  CHECK(r.code == 2);
  CHECK(r.err.find("b.csv") != std::string::npos);
}

TEST_CASE("simulate is byte-identical for a fixed seed") {
  TempDir dir("det");
  Write(dir.path / "model.txt", kEdgesModel);
  const std::string args = "simulate --model " + (dir.path / "model.txt").string() +
                           " --n 50 --steps 10 --seed 42 --out ";
  const Run a = Cli(args + (dir.path / "a").string(), dir.path);
  const Run b = Cli(args + (dir.path / "b").string(), dir.path);
  REQUIRE(a.code == 0);
  REQUIRE(b.code == 0);
  auto strip = [](std::string s) { return s.substr(0, s.find("wrote")); };
  CHECK(strip(a.out) == strip(b.out));
  CHECK(a.out.find("step 10: formed") != std::string::npos);
  for (int t = 0; t <= 10; ++t) {
    const std::string name = "t" + std::to_string(t) + ".csv";
    CHECK(Slurp(dir.path / "a" / name) == Slurp(dir.path / "b" / name));
  }
  const Run c = Cli("simulate --model " + (dir.path / "model.txt").string() + " --n 50 --steps 10 --seed 43",
                    dir.path);
  CHECK(strip(c.out) != strip(a.out));
}

TEST_CASE("simulated spells follow the dissolution coefficient") {
  // formation switched off, keep probability 0.8: mean spell 1 + e^theta = 5
  TempDir dir("spell");
  Write(dir.path / "model.txt", "[formation]\nedges = -40\n[dissolution]\nedges = 1.3862943611198906\n");
  const Run r = Cli("simulate -q --model " + (dir.path / "model.txt").string() +
                        " --n 60 --directed --density 0.5 --steps 120 --seed 5",
                    dir.path);
  REQUIRE(r.code == 0);
  std::smatch m;
  REQUIRE(std::regex_search(r.out, m, std::regex(R"(mean completed spell length: ([0-9.]+))")));
  CHECK(std::stod(m[1]) == doctest::Approx(5.0).epsilon(0.05));
}

TEST_CASE("input problems exit with code 2") {
  TempDir dir("exit2");
  const Run missing = Cli("simulate --model /nonexistent/model.txt --n 10", dir.path);
  CHECK(missing.code == 2);
  CHECK(missing.err.find("/nonexistent/model.txt") != std::string::npos);

  Write(dir.path / "curved.txt", std::string("eta_map = curved\n") + kEdgesModel);
  const Run curved = Cli("simulate --model " + (dir.path / "curved.txt").string() + " --n 10", dir.path);
  CHECK(curved.code == 2);
  CHECK(curved.err.find("not supported") != std::string::npos);

  Write(dir.path / "bad.txt", "[formation]\nedges = -3\ntriangles = 1\n");
  const Run bad = Cli("simulate --model " + (dir.path / "bad.txt").string() + " --n 10", dir.path);
  CHECK(bad.code == 2);
  CHECK(bad.err.find("triangles") != std::string::npos);

  const Run scheme = Cli("fit --series " + (kData / "classroom" / "manifest.json").string() + " --model " +
                             (kData / "classroom" / "model.txt").string() + " --heterogeneous partial",
                         dir.path);
  CHECK(scheme.code == 2);
  CHECK(scheme.err.find("partial") != std::string::npos);

  CHECK(Cli("", dir.path).code == 2);
  CHECK(Cli("frobnicate", dir.path).code == 2);
}

TEST_CASE("degenerate fits exit with code 3 and a diagnostic block") {
  TempDir dir("exit3");
  // no tie ever forms
  Write(dir.path / "a.csv", "tail,head\n1,2\n3,4\n");
  Write(dir.path / "b.csv", "tail,head\n1,2\n");
  Write(dir.path / "m.json", R"({"n": 6, "directed": true, "snapshots": ["a.csv", "a.csv", "b.csv"]})");
  Write(dir.path / "model.txt", "[formation]\nedges\n[dissolution]\nedges\n");
  const Run r = Cli("fit --series " + (dir.path / "m.json").string() + " --model " +
                        (dir.path / "model.txt").string() + " --draws 200",
                    dir.path);
  CHECK(r.code == 3);
  CHECK(r.err.find("diagnostics:") != std::string::npos);
  CHECK(r.err.find("edges") != std::string::npos);
}

TEST_CASE("fit report: AIC column and nested ladder") {
  TempDir dir("fit");
  const fs::path json_path = dir.path / "fit.json";
  const Run r = Cli("fit -q --series " + (kData / "classroom" / "manifest.json").string() + " --model " +
                        (kData / "classroom" / "model.txt").string() +
                        " --heterogeneous edges --ladder --draws 1000 --bridge-draws 500 --bridge-points 8 --seed 9"
                        " --out " + json_path.string(),
                    dir.path);
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  const auto doc = nlohmann::json::parse(Slurp(json_path));
  CHECK(doc["heterogeneity"] == "edges");
  std::size_t q = 0;
  double prev_resid = 0;
  std::size_t rows = 0;
  for (const auto& row : doc["deviance"]) {
    const double resid = row["residual_deviance"].get<double>();
    if (row["model"] == "Null") {
      q = 0;
    } else {
      q += row["explained_df"].get<std::size_t>();
      // each model contains the one before it
      CHECK(resid <= prev_resid + 1e-9);
    }
    CHECK(row["aic"].get<double>() == doctest::Approx(resid + 2.0 * static_cast<double>(q)).epsilon(1e-12));
    prev_resid = resid;
    ++rows;
  }
  CHECK(rows >= 6);
  CHECK(doc["formation"]["terms"].size() == 5 + 3);

  const Run table = Cli("fit --series " + (kData / "classroom" / "manifest.json").string() + " --model " +
                            (kData / "classroom" / "model.txt").string() +
                            " --draws 1000 --bridge-draws 500 --bridge-points 8 --seed 9",
                        dir.path);
  REQUIRE(table.code == 0);
  CHECK(table.out.find("AIC") != std::string::npos);
  CHECK(table.out.find("Resid. Dev") != std::string::npos);
  CHECK(table.out.find("edge_cov(primary)") != std::string::npos);
}
