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

#include "qsvm/cli/commands.hpp"
#include "qsvm/cli/pipeline.hpp"
#include "qsvm/cli/svg.hpp"
#include "qsvm/error.hpp"

namespace qsvm::cli {
namespace {

TEST(Config, ValidatesShotsAndGamma) {
  RunConfig c;
  c.shots = 0;
  EXPECT_THROW(c.validate(), InvalidArgument);
  c.shots = 10;
  c.gamma = -1.0;
  EXPECT_THROW(c.validate(), InvalidArgument);
  c.gamma = 8.0;
  c.dataset = DatasetKind::kCustom;
  EXPECT_THROW(c.validate(), InvalidArgument);
}

TEST(Pipeline, IrisExactReachesNinetySevenPercent) {
  RunConfig c;
  const PipelineResult r = run_pipeline(c);
  EXPECT_NEAR(r.accuracy, 0.97, 1e-12);
  EXPECT_EQ(r.classical_mismatches, 0u);
  EXPECT_EQ(r.depth, 7);
  EXPECT_FALSE(r.js_vs_ideal.has_value());
  EXPECT_LT((r.f.rounded() - (Eigen::MatrixXd(2, 2) << 1, 0.5, 0.5, 1).finished()).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(Pipeline, OriginalOracleGivesTheSameKernel) {
  RunConfig a;
  RunConfig b;
  b.oracle = OracleKind::kOriginal;
  EXPECT_LT((run_pipeline(a).khat.entries() - run_pipeline(b).khat.entries()).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Pipeline, BaselineAgreesWithHhl) {
  RunConfig a;
  RunConfig b;
  b.circuit = CircuitKind::kBaseline;
  const auto ra = run_pipeline(a);
  const auto rb = run_pipeline(b);
  EXPECT_EQ(ra.predicted, rb.predicted);
  EXPECT_EQ(rb.depth, 18);
}

TEST(Pipeline, NoisyRunRecordsDivergence) {
  RunConfig c;
  c.noise = NoiseModel::defaults(c.seed);
  const PipelineResult r = run_pipeline(c);
  ASSERT_TRUE(r.js_vs_ideal.has_value());
  EXPECT_GT(*r.js_vs_ideal, 0.0);
  EXPECT_LT(*r.js_vs_ideal, 1.0);
}

TEST(Pipeline, ReportHasRequiredKeys) {
  RunConfig c;
  const auto j = pipeline_report(c, run_pipeline(c));
  for (const char* key : {"accuracy", "alpha", "khat", "F", "depth", "noise", "confusion"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
}

TEST(DepthTable, CoversTableRowsAndCircuits) {
  const auto t = depth_table();
  ASSERT_EQ(t["oracles"].size(), 3u);
  EXPECT_EQ(t["oracles"][0]["original_constructed"], 9);
  EXPECT_EQ(t["oracles"][1]["original_constructed"], 41);
  EXPECT_EQ(t["oracles"][2]["original_formula"], 177);
  EXPECT_EQ(t["hhl_optimized"], 7);
  EXPECT_EQ(t["baseline"], 18);
  const std::string text = format_depth_table(t);
  EXPECT_NE(text.find("177"), std::string::npos);
}

TEST(CircuitDump, KnownNamesOnly) {
  EXPECT_EQ(cmd_circuit_dump("hhl_optimized", false)["depth"], 7);
  EXPECT_EQ(cmd_circuit_dump("oracle_original", false)["depth"], 9);
  EXPECT_THROW(cmd_circuit_dump("teleport", false), InvalidArgument);
  EXPECT_THROW(cmd_circuit_dump("oracle_new", true), InvalidArgument);
  EXPECT_TRUE(cmd_circuit_dump("baseline", true).contains("coupling_violations"));
}

TEST(Svg, EmitsOneMarkerPerPoint) {
  const std::vector<ScatterPoint> pts{{0.1, 0.2, 1}, {-0.5, 0.3, -1}, {0.7, -0.9, 1}};
  const std::string svg = scatter_svg("a < b", pts, {{1.0, 0.0, 1}}, std::array<double, 2>{0.6, 0.8}, true);
  EXPECT_EQ(svg.rfind("<svg", 0), 0u);
  std::size_t circles = 0;
  for (std::size_t p = svg.find("<circle"); p != std::string::npos; p = svg.find("<circle", p + 1)) ++circles;
  EXPECT_EQ(circles, 3u);
  EXPECT_NE(svg.find("a &lt; b"), std::string::npos);
  EXPECT_NE(svg.find("<ellipse"), std::string::npos);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
}

TEST(Svg, EmptyInputStillRenders) { EXPECT_NE(scatter_svg("empty", {}).find("</svg>"), std::string::npos); }

TEST(Names, EnumsPrintAsFlagValues) {
  EXPECT_EQ(to_string(CircuitKind::kHhlOptimized), "hhl_optimized");
  EXPECT_EQ(to_string(AngleMode::kPriorArt), "prior_art");
  EXPECT_EQ(to_string(OracleKind::kOriginal), "original");
  EXPECT_EQ(to_string(DatasetKind::kOcr), "ocr");
}

}  // namespace
}  // namespace qsvm::cli
