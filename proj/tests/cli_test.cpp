//
// Copyright 2026 The dpopt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

// End-to-end checks of the dpopt binary: artifacts, determinism, exit codes.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "dpopt/matrix_io.hpp"
#include "dpopt/workload.hpp"
#include "test_util.hpp"

using namespace dpopt;
using namespace dpopt::test;
namespace fs = std::filesystem;

namespace {

const fs::path kWorkDir = fs::temp_directory_path() / "dpopt_cli_test";

int run_cli(const std::string& args) {
  const std::string cmd = std::string(DPOPT_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  REQUIRE(in.good());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

nlohmann::json load_json(const fs::path& p) { return nlohmann::json::parse(slurp(p)); }

struct WorkDir {
  WorkDir() {
    fs::remove_all(kWorkDir);
    fs::create_directories(kWorkDir);
  }
  fs::path operator/(const char* name) const { return kWorkDir / name; }
};

}  // namespace

TEST_CASE("generate writes the workload and its metadata") {
  WorkDir dir;
  const auto w_path = dir / "w.csv";
  CHECK(run_cli("generate --family wrange --m 128 --n 64 --seed 7 --out " +
                w_path.string()) == 0);

  const WorkloadMatrix w = load_workload(w_path);
  CHECK(w.W.rows() == 128);
  CHECK(w.W.cols() == 64);
  for (int i = 0; i < w.W.rows(); ++i) {
    int first = -1, last = -1;
    for (int j = 0; j < w.W.cols(); ++j)
      if (w.W(i, j) == 1.0) {
        if (first < 0) first = j;
        last = j;
      }
    REQUIRE(first >= 0);
    for (int j = first; j <= last; ++j) CHECK(w.W(i, j) == 1.0);
  }

  const auto meta = load_json(dir / "w.meta.json");
  CHECK(meta["family"] == "wrange");
  CHECK(meta["m"] == 128);
  CHECK(meta["n"] == 64);
  CHECK(meta["seed"] == 7);
}

TEST_CASE("generate is deterministic for a fixed seed") {
  WorkDir dir;
  const auto a = dir / "a.csv";
  const auto b = dir / "b.csv";
  CHECK(run_cli("generate --family wdiscrete --m 32 --n 16 --seed 11 --out " +
                a.string()) == 0);
  CHECK(run_cli("generate --family wdiscrete --m 32 --n 16 --seed 11 --out " +
                b.string()) == 0);
  CHECK(slurp(a) == slurp(b));  // byte identical
}

TEST_CASE("generate rejects invalid dimensions with exit 2") {
  WorkDir dir;
  CHECK(run_cli("generate --family wdiscrete --m 0 --n 4 --seed 1 --out " +
                (dir / "x.csv").string()) == 2);
  CHECK(run_cli("generate --family nosuch --m 4 --n 4 --seed 1 --out " +
                (dir / "x.csv").string()) == 2);
}

TEST_CASE("unwritable output path exits 3") {
  WorkDir dir;
  CHECK(run_cli("generate --family wrange --m 4 --n 4 --seed 1 "
                "--out /nonexistent-dir/w.csv") == 3);
}

TEST_CASE("optimize on the identity workload returns the identity") {
  WorkDir dir;
  const auto w_path = dir / "id.csv";
  save_matrix_csv(DenseMatrix::identity(8), w_path);
  CHECK(run_cli("optimize --workload " + w_path.string() + " --out " +
                (dir / "run").string()) == 0);

  const DenseMatrix x = load_matrix_csv(dir / "run.X.csv");
  CHECK(max_abs_diff(x, DenseMatrix::identity(8)) == 0.0);
  const auto trace = load_json(dir / "run.trace.json");
  CHECK(trace["runs"][0]["iterations"].size() == 1);
}

TEST_CASE("optimize reaches the canonical 2x2 closed form") {
  WorkDir dir;
  const auto w_path = dir / "w2.csv";
  save_matrix_csv(DenseMatrix{{1.0, 0.0}, {1.0, 1.0}, {0.0, 1.0}}, w_path);
  CHECK(run_cli("optimize --workload " + w_path.string() + " --out " +
                (dir / "c2").string() + " --theta 0 --scaling raw") == 0);

  const auto trace = load_json(dir / "c2.trace.json");
  const double f_star = trace["runs"][0]["iterations"].back()["objective"];
  CHECK(std::fabs(f_star - (2.0 + std::sqrt(3.0))) < 1e-6);

  const DenseMatrix x = load_matrix_csv(dir / "c2.X.csv");
  CHECK(std::fabs(x(0, 1) - (2.0 - std::sqrt(3.0))) < 1e-4);

  // the strategy artifact reproduces X
  const DenseMatrix a = load_matrix_csv(dir / "c2.A.csv");
  CHECK(max_abs_diff(symmetrized(matmul(transpose(a), a)), x) < 1e-12);
}

TEST_CASE("optimize --homotopy emits stage-tagged traces") {
  WorkDir dir;
  const auto w_path = dir / "w.csv";
  CHECK(run_cli("generate --family wrelated --m 12 --n 8 --s 8 --seed 3 --out " +
                w_path.string()) == 0);
  CHECK(run_cli("optimize --workload " + w_path.string() + " --out " +
                (dir / "h").string() + " --homotopy") == 0);

  const auto trace = load_json(dir / "h.trace.json");
  REQUIRE(trace["runs"].size() == 11);  // theta 1 down to 1e-10 by decades
  CHECK(trace["runs"][0]["theta"] == 1.0);
  CHECK(double(trace["runs"].back()["theta"]) == doctest::Approx(1e-10));

  // the staged CSV carries stage and theta columns
  std::ifstream csv(dir / "h.trace.csv");
  std::string comment, header;
  std::getline(csv, comment);
  std::getline(csv, header);
  CHECK(header == "stage,theta,iter,F,dnorm,alpha,cg_iters,ls_trials");
}

TEST_CASE("evaluate: identity strategy reproduces the GM baseline") {
  WorkDir dir;
  const auto w_path = dir / "w.csv";
  CHECK(run_cli("generate --family wrange --m 24 --n 12 --seed 5 --out " +
                w_path.string()) == 0);
  const auto a_path = dir / "id.csv";
  save_matrix_csv(DenseMatrix::identity(12), a_path);

  CHECK(run_cli("evaluate --workload " + w_path.string() + " --strategy " +
                a_path.string() + " --trials 500 --seed 9 --out " +
                (dir / "rep.json").string()) == 0);
  const auto rep = load_json(dir / "rep.json");
  CHECK(double(rep["analytic_expected_error"]) == double(rep["gm_baseline_error"]));
  CHECK(double(rep["ratio_vs_gm"]) == 1.0);
}

TEST_CASE("evaluate: optimized strategy never loses to the baseline") {
  WorkDir dir;
  const auto w_path = dir / "w.csv";
  CHECK(run_cli("generate --family wdiscrete --m 32 --n 16 --seed 21 --out " +
                w_path.string()) == 0);
  CHECK(run_cli("optimize --workload " + w_path.string() + " --out " +
                (dir / "o").string()) == 0);

  const std::string eval_cmd = "evaluate --workload " + w_path.string() +
                               " --strategy " + (dir / "o.A.csv").string() +
                               " --trials 2000 --seed 13 --csv " +
                               (dir / "table.csv").string() + " --out ";
  CHECK(run_cli(eval_cmd + (dir / "r1.json").string()) == 0);
  CHECK(run_cli(eval_cmd + (dir / "r2.json").string()) == 0);

  const auto r1 = load_json(dir / "r1.json");
  CHECK(double(r1["ratio_vs_gm"]) <= 1.0);
  // fixed seed: the Monte-Carlo mean is reproducible
  const auto r2 = load_json(dir / "r2.json");
  CHECK(double(r1["empirical_mean_error"]) == double(r2["empirical_mean_error"]));

  // two rows were appended under one header
  std::ifstream table(dir / "table.csv");
  std::string line;
  int lines = 0;
  while (std::getline(table, line)) ++lines;
  CHECK(lines == 3);
}

TEST_CASE("evaluate rejects mismatched strategy dimensions with exit 4") {
  WorkDir dir;
  const auto w_path = dir / "w.csv";
  CHECK(run_cli("generate --family wrange --m 8 --n 6 --seed 2 --out " +
                w_path.string()) == 0);
  const auto a_path = dir / "a.csv";
  save_matrix_csv(DenseMatrix::identity(4), a_path);
  CHECK(run_cli("evaluate --workload " + w_path.string() + " --strategy " +
                a_path.string() + " --out " + (dir / "r.json").string()) == 4);
}

TEST_CASE("optimize exits 4 on a rank-deficient gram with theta 0") {
  WorkDir dir;
  const auto w_path = dir / "w.csv";
  save_matrix_csv(DenseMatrix{{1.0, 1.0}}, w_path);
  CHECK(run_cli("optimize --workload " + w_path.string() + " --out " +
                (dir / "x").string() + " --theta 0 --scaling raw") == 4);
}

TEST_CASE("sweep writes one row per grid point, deterministically") {
  WorkDir dir;
  const std::string cmd = "sweep --family wrange --n-list 8,12,16 --m-list 32 "
                          "--seed 3 --out ";
  CHECK(run_cli(cmd + (dir / "s1.csv").string()) == 0);
  CHECK(run_cli(cmd + (dir / "s2.csv").string()) == 0);

  // same seeds give identical result columns; only the *_ms timings may move
  const auto result_columns = [](const fs::path& p) {
    std::istringstream in(slurp(p));
    std::string line;
    std::vector<std::string> rows;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#' || line.rfind("family,", 0) == 0) continue;
      std::vector<std::string> fields;
      std::istringstream ls(line);
      std::string f;
      while (std::getline(ls, f, ',')) fields.push_back(f);
      REQUIRE(fields.size() == 14);
      std::string kept;
      for (size_t i = 0; i < fields.size(); ++i)
        if (i < 5 || i > 7) kept += fields[i] + "|";  // drop the ms columns
      rows.push_back(kept);
    }
    return rows;
  };

  const auto r1 = result_columns(dir / "s1.csv");
  CHECK(r1 == result_columns(dir / "s2.csv"));
  CHECK(r1.size() == 3);
  for (const std::string& row : r1) CHECK(row.find("|ok|") != std::string::npos);
}

TEST_CASE("sweep with an empty grid exits 2") {
  WorkDir dir;
  CHECK(run_cli("sweep --family wrange --n-list \"\" --m-list 8 --seed 1 --out " +
                (dir / "s.csv").string()) == 2);
  CHECK(run_cli("sweep --family wrange --n-list -4 --m-list 8 --seed 1 --out " +
                (dir / "s.csv").string()) == 2);
}
