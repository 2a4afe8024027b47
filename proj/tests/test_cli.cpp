// Copyright 2026 The streamcc Authors.
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

#include <sys/wait.h>

#include <unistd.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "gtest/gtest.h"
#include "nlohmann/json.hpp"
#include "streamcc/edge_list.hpp"

#ifndef STREAMCC_CLI_PATH
#error "STREAMCC_CLI_PATH must name the streamcc binary"
#endif

namespace streamcc {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int exit_code = -1;
  std::string out;
};

// Runs "[env] streamcc <args>" through the shell and captures stdout.
Outcome run(const std::string& args, const std::string& env = "") {
  const std::string command =
      env + " '" + STREAMCC_CLI_PATH + "' " + args;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return {};
  Outcome result;
  char buffer[4096];
  std::size_t got;
  while ((got = fread(buffer, 1, sizeof(buffer), pipe)) > 0) {
    result.out.append(buffer, got);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::size_t count_lines(const std::string& text) {
  return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n'));
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("streamcc_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& contents) {
    const fs::path path = dir_ / name;
    std::ofstream(path) << contents;
    return "'" + path.string() + "'";
  }
  std::string path(const std::string& name) const {
    return "'" + (dir_ / name).string() + "'";
  }

  fs::path dir_;
};

TEST_F(CliTest, ClustersATriangle) {
  const auto tri = file("tri.txt", "1 2\n2 3\n1 3\n");
  const Outcome r = run("cluster " + tri + " --k 2 --seed 3 2>/dev/null");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(count_lines(r.out), 3u);
  std::istringstream in(r.out);
  EXPECT_EQ(read_clustering_tsv(in).num_clusters(), 1u);
}

TEST_F(CliTest, OutputIsByteIdenticalAcrossRuns) {
  const auto edges = file("g.txt", "");
  ASSERT_EQ(run("gen --kind random --n 40 --p 0.15 --seed 5 --order shuffled "
                "--out " + edges).exit_code, 0);
  const std::string args = "cluster " + edges + " --k 3 --seed 11 2>/dev/null";
  const Outcome first = run(args);
  const Outcome second = run(args);
  ASSERT_EQ(first.exit_code, 0);
  EXPECT_EQ(first.out, second.out);
  EXPECT_EQ(count_lines(first.out), 40u);
}

TEST_F(CliTest, SeedFallsBackToEnvironment) {
  const auto edges = file("g.txt", "");
  ASSERT_EQ(run("gen --kind random --n 30 --p 0.2 --seed 2 --out " + edges)
                .exit_code, 0);
  const Outcome flag = run("cluster " + edges + " --k 2 --seed 19 2>/dev/null");
  const Outcome env = run("cluster " + edges + " --k 2 2>/dev/null",
                          "STREAMCC_SEED=19");
  ASSERT_EQ(env.exit_code, 0);
  EXPECT_EQ(env.out, flag.out);
  const Outcome other = run("cluster " + edges + " --k 2 2>/dev/null",
                            "STREAMCC_SEED=20");
  EXPECT_NE(other.out, flag.out);
}

TEST_F(CliTest, RejectsBadParameters) {
  const auto tri = file("tri.txt", "1 2\n2 3\n1 3\n");
  EXPECT_EQ(run("cluster " + tri + " --k 1 2>/dev/null").exit_code, 2);
  EXPECT_EQ(run("cluster - --k 2 < /dev/null 2>/dev/null").exit_code, 2);
  EXPECT_EQ(run("cluster " + tri + " 2>/dev/null").exit_code, 2);
  EXPECT_EQ(run("frobnicate 2>/dev/null").exit_code, 2);
}

TEST_F(CliTest, MalformedLineNamesTheLine) {
  const auto bad = file("bad.txt", "1 2\n2 x\n");
  const Outcome r = run("cluster " + bad + " --k 2 2>&1 >/dev/null");
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_NE(r.out.find("line 2"), std::string::npos) << r.out;
}

TEST_F(CliTest, ReadsFromStdin) {
  const auto tri = file("tri.txt", "1 2\n2 3\n1 3\n");
  const Outcome piped =
      run("cluster - --n 3 --k 2 --seed 4 < " + tri + " 2>/dev/null");
  const Outcome direct = run("cluster " + tri + " --k 2 --seed 4 2>/dev/null");
  ASSERT_EQ(piped.exit_code, 0);
  EXPECT_EQ(piped.out, direct.out);
  EXPECT_EQ(run("cluster - --n 2 --k 2 < " + tri + " 2>/dev/null").exit_code,
            2);
}

TEST_F(CliTest, SummaryAndOutputFiles) {
  const auto tri = file("tri.txt", "1 2\n2 3\n1 3\n");
  const Outcome r = run("cluster " + tri + " --k 2 --seed 1 --cost --out " +
                        path("out.tsv") + " --summary " + path("s.json"));
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(count_lines(slurp(dir_ / "out.tsv")), 3u);
  const auto summary = nlohmann::json::parse(slurp(dir_ / "s.json"));
  EXPECT_EQ(summary["n"], 3);
  EXPECT_EQ(summary["num_clusters"], 1);
  EXPECT_EQ(summary["cost"]["total"], 0);
  EXPECT_LE(summary["peak_entries"].get<int>(),
            summary["entry_bound"].get<int>());
}

TEST_F(CliTest, OrderCheckPasses) {
  const auto edges = file("g.txt", "");
  ASSERT_EQ(run("gen --kind planted --sizes 5,5,5 --flip 0.2 --seed 3 --order "
                "shuffled --out " + edges).exit_code, 0);
  EXPECT_EQ(run("cluster " + edges + " --k 3 --order-check --seed 2 "
                ">/dev/null 2>&1").exit_code, 0);
}

TEST_F(CliTest, EvalReportsCost) {
  const auto clustering = file("c.tsv", "1\t1\n2\t1\n3\t2\n");
  const auto path_edges = file("p.txt", "1 2\n2 3\n");
  const Outcome r = run("eval " + clustering + " " + path_edges);
  ASSERT_EQ(r.exit_code, 0);
  const auto report = nlohmann::json::parse(r.out);
  EXPECT_EQ(report["cut_positive"], 1);
  EXPECT_EQ(report["joined_negative"], 0);
  EXPECT_EQ(report["total"], 1);

  const auto together = file("t.tsv", "1\t1\n2\t1\n3\t1\n");
  const auto empty = file("e.txt", "n 3\n");
  EXPECT_EQ(nlohmann::json::parse(run("eval " + together + " " + empty).out)
                ["total"], 3);
  const auto short_clustering = file("s.tsv", "1\t1\n2\t1\n");
  EXPECT_EQ(run("eval " + short_clustering + " " + empty + " 2>/dev/null")
                .exit_code, 2);
}

TEST_F(CliTest, CompareAgreesOnGeneratedInstances) {
  const auto edges = file("g.txt", "");
  ASSERT_EQ(run("gen --kind random --n 25 --p 0.25 --seed 8 --out " + edges)
                .exit_code, 0);
  for (const char* k : {"2", "3", "30"}) {
    const Outcome r = run("compare " + edges + " --k " + k);
    EXPECT_EQ(r.exit_code, 0) << r.out;
    EXPECT_EQ(count_lines(r.out), 10u);
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
  }
  const Outcome big_k = run("compare " + edges + " --k 30 --seeds 4");
  EXPECT_NE(big_k.out.find("classic=match"), std::string::npos);

  const auto empty = file("e.txt", "n 4\n");
  EXPECT_EQ(run("compare " + empty + " --k 2").exit_code, 0);
}

TEST_F(CliTest, GenProducesExpectedShapes) {
  const Outcome clique = run("gen --kind clique --n 4");
  ASSERT_EQ(clique.exit_code, 0);
  EXPECT_EQ(clique.out, "n 4\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n");

  EXPECT_EQ(run("gen --kind empty --n 3").out, "n 3\n");

  const Outcome planted = run("gen --kind planted --sizes 3,3 --flip 0");
  EXPECT_EQ(planted.out, "n 6\n1 2\n1 3\n2 3\n4 5\n4 6\n5 6\n");

  const Outcome negatives = run("gen --kind path --n 3 --negatives");
  EXPECT_EQ(negatives.out, "n 3\n1 2\n1 3 -\n2 3\n");

  EXPECT_EQ(run("gen --kind random --n 0 --p 0.1 2>/dev/null").exit_code, 2);
  EXPECT_EQ(run("gen --kind planted --sizes 3 --flip 2 2>/dev/null").exit_code,
            2);
}

TEST_F(CliTest, BenchRespectsEntryBound) {
  const Outcome r = run("bench --kind random --n 40 --p 0.2 --k-list 2,4 "
                        "--trials 2 --summary " + path("b.json"));
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(count_lines(r.out), 3u);
  const auto summary = nlohmann::json::parse(slurp(dir_ / "b.json"));
  ASSERT_EQ(summary["rows"].size(), 2u);
  for (const auto& row : summary["rows"]) {
    EXPECT_LE(row["peak_entries"].get<int>(), row["entry_bound"].get<int>());
  }
}

}  // namespace
}  // namespace streamcc
