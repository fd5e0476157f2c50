// Copyright 2026 The risdas Authors
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

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "risdas/channel_io.hpp"
#include "risdas/cli.hpp"
#include "risdas/harness.hpp"

using namespace risdas;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "risdas");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = fs::temp_directory_path() / ("risdas_test_" + std::to_string(rd()) + std::to_string(rd()));
    fs::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  const fs::path& path() const { return path_; }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

}  // namespace

TEST_CASE("solve prints configuration, power and SNR") {
  TempDir tmp;
  spit(tmp.file("ch.csv"), "idx,g_re,g_im,hr_re,hr_im\n0,1,0,1,0\nhd,1,0,1,1\n");
  const auto r = run({"solve", tmp.file("ch.csv")});
  CHECK(r.code == 0);
  CHECK(r.out.find("w: +\n") != std::string::npos);
  CHECK(r.out.find("theta_rad: 0\n") != std::string::npos);
  CHECK(r.out.find("power: 4\n") != std::string::npos);
  CHECK(r.out.find("snr_db: 6.0205999") != std::string::npos);
}

TEST_CASE("solve with exhaustive verification") {
  TempDir tmp;
  write_channel_file(tmp.file("ch.csv"), generate_channel(12, 31));
  const auto r = run({"solve", tmp.file("ch.csv"), "--verify-exhaustive"});
  CHECK(r.code == 0);
  CHECK(r.out.find("verified: optimal") != std::string::npos);

  const auto refused = run({"solve", tmp.file("ch.csv"), "--verify-exhaustive", "--exhaustive-limit", "10"});
  CHECK(refused.code == 4);
  CHECK(refused.err.find("limit of 10") != std::string::npos);
}

TEST_CASE("solve input errors") {
  TempDir tmp;
  spit(tmp.file("nofooter.csv"), "idx,g_re,g_im,hr_re,hr_im\n0,1,0,1,0\n");
  const auto r = run({"solve", tmp.file("nofooter.csv")});
  CHECK(r.code == 2);
  CHECK(r.err.find("footer") != std::string::npos);

  spit(tmp.file("bad.csv"), "idx,g_re,g_im,hr_re,hr_im\n0,1,0,1,0\n1,1,zz,1,0\nhd,0,0,1,1\n");
  const auto bad = run({"solve", tmp.file("bad.csv")});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("line 3") != std::string::npos);

  CHECK(run({"solve", tmp.file("missing.csv")}).code == 3);
  CHECK(run({"solve"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
}

TEST_CASE("gen writes a channel that solve accepts") {
  TempDir tmp;
  const auto g1 = run({"gen", "--n", "8", "--seed", "5", "--out", tmp.file("a.csv")});
  CHECK(g1.code == 0);
  const auto s1 = run({"solve", tmp.file("a.csv")});
  const auto s2 = run({"solve", tmp.file("a.csv")});
  CHECK(s1.code == 0);
  CHECK(s1.out == s2.out);

  const auto stdout_gen = run({"gen", "--n", "8", "--seed", "5"});
  CHECK(stdout_gen.out == slurp(tmp.file("a.csv")));

  const auto nolos = run({"gen", "--n", "8", "--seed", "5", "--no-los"});
  CHECK(nolos.code == 0);
  CHECK(nolos.out.find("\nhd,0,0,1,1\n") != std::string::npos);

  CHECK(run({"gen", "--n", "0"}).code == 2);
  CHECK(run({"gen", "--n", "4", "--noise-power", "0"}).code == 2);
  CHECK(run({"gen", "--n", "4", "--out", (tmp.path() / "no" / "such" / "x.csv").string()}).code == 3);
}

TEST_CASE("bench writes trial and aggregate CSVs") {
  TempDir tmp;
  const auto r = run({"bench", "--n", "10,50", "--trials", "5", "--seed", "1", "--methods", "das", "--out",
                      tmp.file("out")});
  REQUIRE(r.code == 0);
  std::ifstream agg(tmp.file("out/aggregate.csv"));
  const auto rows = read_aggregate_csv(agg);
  CHECK(rows.size() == 2);
  std::ifstream trials(tmp.file("out/trials.csv"));
  CHECK(read_trials_csv(trials).size() == 10);
}

TEST_CASE("bench rejections and I/O failures") {
  TempDir tmp;
  const auto r = run({"bench", "--n", "25", "--trials", "10", "--methods", "das,exhaustive",
                      "--exhaustive-limit", "20", "--out", tmp.file("x")});
  CHECK(r.code == 4);
  CHECK(r.err.find("20") != std::string::npos);
  CHECK_FALSE(fs::exists(tmp.file("x/trials.csv")));

  spit(tmp.file("plainfile"), "x");
  CHECK(run({"bench", "--n", "4", "--trials", "1", "--out", tmp.file("plainfile/sub")}).code == 3);

  CHECK(run({"bench", "--n", "4", "--trials", "0"}).code == 2);
  CHECK(run({"bench", "--n", "4,0", "--trials", "1"}).code == 2);
  CHECK(run({"bench", "--n", "4", "--trials", "1", "--methods", "sdr"}).code == 2);
  CHECK(run({"bench", "--trials", "1"}).code == 2);
}

TEST_CASE("compare prints a table with gaps") {
  TempDir tmp;
  const auto r = run({"compare", "--n", "6", "--trials", "20", "--seed", "2", "--methods",
                      "das,exhaustive,greedy,random", "--out", tmp.file("cmp.csv")});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("gap_to_das") != std::string::npos);
  CHECK(r.out.find("exhaustive") != std::string::npos);
  std::ifstream in(tmp.file("cmp.csv"));
  const auto rows = read_aggregate_csv(in);
  REQUIRE(rows.size() == 4);
  CHECK(*rows[0].optimality_rate == 1.0);
}
