// Copyright 2026 The GUTEK Authors.
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

#include "gutek/report.h"

#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace gutek {
namespace {

using nlohmann::json;

Explanation SampleExplanation() {
  Explanation e{
      .document = SplitSentences("The plot <drags>. Acting is \"great\" & warm! Ending: fine.")};
  e.unit_scores = {-0.25, 0.5, 0.0};
  e.intercept = 0.125;
  e.target_class = 1;
  e.target_label = "pos";
  e.fit_r2 = 0.75;
  e.n_samples = 8;
  return e;
}

const RunInfo kRun{"builtin-nb-0123456789abcdef", 10, 3};

TEST(ReportTest, ExplanationJsonFields) {
  const json j = json::parse(ExplanationJson(SampleExplanation(), kRun));
  EXPECT_EQ(j["method"], "gutek");
  EXPECT_EQ(j["granularity"], "sentence");
  EXPECT_EQ(j["budget"], 10);
  EXPECT_EQ(j["seed"], 3);
  EXPECT_EQ(j["target_label"], "pos");
  ASSERT_EQ(j["units"].size(), 3u);
  EXPECT_EQ(j["units"][0]["text"], "The plot <drags>.");
  EXPECT_EQ(j["units"][1]["char_start"], 18);
  EXPECT_EQ(j["units"][1]["score"], 0.5);
  EXPECT_EQ(j["ridge_used"], false);
}

TEST(ReportTest, JsonEndsWithNewline) {
  const std::string out = ExplanationJson(SampleExplanation(), kRun);
  EXPECT_EQ(out.back(), '\n');
  EXPECT_EQ(out.substr(0, 4), "{\n  ");
}

TEST(ReportTest, HtmlMatchesGolden) {
  const std::string html = ExplanationHtml(SampleExplanation(), kRun);
  const std::string path = std::string(GUTEK_TEST_DATA_DIR) + "/explanation_golden.html";
  if (std::getenv("GUTEK_UPDATE_GOLDEN") != nullptr) {
    std::ofstream(path) << html;
  }
  std::ifstream in(path);
  ASSERT_TRUE(in) << path;
  std::stringstream golden;
  golden << in.rdbuf();
  EXPECT_EQ(html, golden.str());
  EXPECT_NE(html.find("rgba(220,38,38,0.500)"), std::string::npos);
  EXPECT_NE(html.find("rgba(22,163,74,1.000)"), std::string::npos);
  EXPECT_NE(html.find("&lt;drags&gt;"), std::string::npos);
  EXPECT_EQ(html.find("<drags>"), std::string::npos);
}

TEST(ReportTest, FidelityReport) {
  FidelityResult r;
  r.task_id = "t";
  r.interpreter = "gutek";
  r.records = {Evaluate({0.1, 0.9}, {1})};
  r.example_index = {4};
  r.report = Aggregate(r.records);
  r.n_skipped = 2;
  const json j = json::parse(FidelityReportJson(r, kRun));
  EXPECT_EQ(j["report"]["mean_iou"], 100.0);
  EXPECT_EQ(j["n_skipped"], 2);
  EXPECT_EQ(j["records"][0]["example"], 4);
  EXPECT_TRUE(j["records"][0]["snr"].is_null());
}

TEST(ReportTest, NeighborhoodAndSegStats) {
  const json n = json::parse(NeighborhoodStatsJson(ComputeNeighborhoodStats(5.1, 20)));
  EXPECT_NEAR(n["size"].get<double>(), 34.296, 1e-3);
  EXPECT_NEAR(n["explored_fraction"].get<double>(), 0.5832, 1e-4);
  SegStats s;
  s.n_texts = 3;
  const json j = json::parse(SegStatsJson(s, "sentence"));
  EXPECT_EQ(j["segmenter"], "sentence");
  EXPECT_EQ(j["n_texts"], 3);
}

}  // namespace
}  // namespace gutek
