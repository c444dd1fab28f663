// Copyright 2026 The qsvm Authors
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

#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>
#include <sys/wait.h>

#include "json.hpp"
#include "qsvm/cli/commands.hpp"
#include "temp_dir.hpp"

namespace qsvm {
namespace {

using testing::read_file;
using testing::TempDir;

int run_cli(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " '" + std::string(QSVM_CLI_PATH) + "' " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

TEST(Cli, RunIsByteIdenticalAcrossRunsAndThreadCounts) {
  TempDir a, b;
  const std::string flags = "run --noise default --shots 4096 --seed 99 ";
  ASSERT_EQ(run_cli(flags + "--threads 1 --output-dir " + a.path().string()), 0);
  ASSERT_EQ(run_cli(flags + "--threads 3 --output-dir " + b.path().string()), 0);
  for (const char* f : {"report.json", "classification.csv", "boundary.svg"}) {
    const std::string x = read_file(a.path() / f);
    EXPECT_FALSE(x.empty()) << f;
    EXPECT_EQ(x, read_file(b.path() / f)) << f;
  }
}

TEST(Cli, ExactIrisRunReportsNinetySevenPercent) {
  TempDir d;
  ASSERT_EQ(run_cli("run --dataset iris --circuit hhl_optimized --output-dir " + d.path().string()), 0);
  const auto j = nlohmann::json::parse(read_file(d.path() / "report.json"));
  EXPECT_NEAR(j["accuracy"].get<double>(), 0.97, 1e-12);
  EXPECT_EQ(j["depth"], 7);
  EXPECT_TRUE(j["noise"].is_null());
  EXPECT_EQ(lines(read_file(d.path() / "classification.csv")).size(), 101u);
}

TEST(Cli, SeedEnvironmentOverridesFlag) {
  TempDir d;
  ASSERT_EQ(run_cli("run --noise default --seed 1 --output-dir " + d.path().string(), "QSVM_SEED=5"), 0);
  const auto j = nlohmann::json::parse(read_file(d.path() / "report.json"));
  EXPECT_EQ(j["seed"], 5);
  EXPECT_EQ(run_cli("run --output-dir " + d.path().string(), "QSVM_SEED=abc"), 1);
}

TEST(Cli, PreprocessWritesFourStagesOfHundredRows) {
  TempDir d;
  ASSERT_EQ(run_cli("preprocess --dataset iris --output-dir " + d.path().string()), 0);
  for (const char* stage : {"stage1_raw", "stage2_mapped", "stage3_normalized", "stage4_angles"}) {
    EXPECT_EQ(lines(read_file(d.path() / (std::string(stage) + ".csv"))).size(), 101u) << stage;
    EXPECT_TRUE(std::filesystem::exists(d.path() / (std::string(stage) + ".svg"))) << stage;
  }
  const auto rows = lines(read_file(d.path() / "stage3_normalized.csv"));
  for (std::size_t i = 1; i < rows.size(); ++i) {
    std::istringstream in(rows[i]);
    std::string idx, x1, x2;
    std::getline(in, idx, ',');
    std::getline(in, x1, ',');
    std::getline(in, x2, ',');
    const double a = std::stod(x1), b = std::stod(x2);
    EXPECT_NEAR(a * a + b * b, 1.0, 1e-9) << rows[i];
  }
}

TEST(Cli, ExitCodesFollowTheErrorKind) {
  TempDir d;
  EXPECT_EQ(run_cli("run --bogus-flag"), 1);
  EXPECT_EQ(run_cli("run --shots 0"), 1);
  EXPECT_EQ(run_cli(""), 1);
  EXPECT_EQ(run_cli("run --dataset " + (d.path() / "missing.csv").string()), 2);
  const auto empty = d.write("empty.csv", "sepal.length,sepal.width,petal.length,petal.width,species\n");
  EXPECT_EQ(run_cli("preprocess --dataset " + empty.string() + " --output-dir " + d.path().string()), 2);
  EXPECT_EQ(run_cli("run --dataset " + d.path().string() + " --output-dir " + d.path().string()), 2);
  // Gamma 0.5 pushes F away from the eigenvalues the circuits encode.
  EXPECT_EQ(run_cli("run --gamma 0.5 --output-dir " + d.path().string()), 3);
  EXPECT_EQ(run_cli("depth-table"), 0);
  EXPECT_EQ(run_cli("circuit-dump baseline --coupling"), 0);
}

TEST(Divergence, SweepIsMonotoneAndOrdered) {
  cli::RunConfig c;
  c.noise = NoiseModel::defaults(c.seed);
  const auto j = cli::cmd_divergence(c);
  EXPECT_TRUE(j["ordering_holds"].get<bool>());
  EXPECT_TRUE(j["monotone"].get<bool>());
  EXPECT_EQ(j["circuits"]["hhl_optimized"]["depth"], 7);
  EXPECT_EQ(j["circuits"]["baseline"]["depth"], 18);
}

TEST(Divergence, ZeroNoiseIsNearlyIdeal) {
  for (auto k : {cli::CircuitKind::kHhlOptimized, cli::CircuitKind::kBaseline}) {
    EXPECT_LT(cli::median_js(k, NoiseModel::noiseless(3), 8192, 3, 0), 0.01);
  }
}

}  // namespace
}  // namespace qsvm
