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

#include "gutek/diagnostics.h"

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "gutek/error.h"
#include "gutek/naive_bayes.h"
#include "gutek/synthetic.h"

namespace gutek {
namespace {

// Embeds a text as [count of "beacon", hashed noise...].
std::shared_ptr<FunctionModel> BeaconModel() {
  ModelInfo info{"beacon", {"a", "b"}, true, true};
  return std::make_shared<FunctionModel>(
      info, [](const std::string&) { return std::vector<double>{0.5, 0.5}; },
      [](const std::string& text) {
        std::istringstream in(text);
        double beacons = 0.0;
        size_t h = std::hash<std::string>{}(text);
        for (std::string w; in >> w;) beacons += w == "beacon";
        std::vector<double> v = {beacons};
        for (int i = 0; i < 3; ++i) {
          h = h * 6364136223846793005ULL + 1442695040888963407ULL;
          v.push_back(static_cast<double>(h >> 40) / static_cast<double>(1ULL << 24));
        }
        return v;
      });
}

std::vector<std::string> PlainTexts(size_t n) {
  std::vector<std::string> texts;
  for (size_t i = 0; i < n; ++i) {
    texts.push_back("Text number " + std::to_string(i) + " has a beacon inside. It ends here.");
  }
  return texts;
}

TEST(PerturbationTest, Behaviour) {
  Rng rng(1);
  EXPECT_EQ(*IdentityPerturbation().apply("A b.", rng), "A b.");
  const auto removed = RemoveWordsPerturbation(2).apply("one two three four", rng);
  ASSERT_TRUE(removed);
  EXPECT_EQ(SplitWords(*removed).size(), 2u);
  EXPECT_FALSE(RemoveWordsPerturbation(4).apply("one two three four", rng));
  const auto one_sentence = RemoveSentencePerturbation().apply("A b. C d. E f.", rng);
  ASSERT_TRUE(one_sentence);
  EXPECT_EQ(SplitSentences(*one_sentence).size(), 2u);
  EXPECT_FALSE(RemoveSentencePerturbation().apply("Only one.", rng));
  EXPECT_EQ(*RemoveTokenPerturbation("Beacon").apply("a beacon b BEACON.", rng), "a b .");
  EXPECT_FALSE(RemoveTokenPerturbation("beacon").apply("nothing", rng));
}

TEST(OodTest, IdentityPerturbationIsIndistinguishable) {
  const auto corpus = SyntheticTrainingCorpus(100);
  ModelHandle handle(NaiveBayesModel::Train(corpus));
  const auto task = SyntheticFidelityTask(500);
  std::vector<std::string> texts;
  for (const auto& ex : task.examples) texts.push_back(ex.context);
  OodOptions opts;
  opts.forest.n_trees = 30;
  opts.seed = 2;
  const OodResult r = RunOodScheme(handle, texts, IdentityPerturbation(), opts);
  EXPECT_EQ(r.n_texts_used, 500u);
  EXPECT_EQ(r.n_train + r.n_test, 1000u);
  EXPECT_GE(r.accuracy, 0.4);
  EXPECT_LE(r.accuracy, 0.6);
}

TEST(OodTest, RemovingBeaconIsSeparable) {
  ModelHandle handle(BeaconModel());
  const auto texts = PlainTexts(200);
  OodOptions opts;
  opts.forest.n_trees = 30;
  const auto [beacon, identity] = RunOodExperiment(
      handle, texts, RemoveTokenPerturbation("beacon"), IdentityPerturbation(), opts);
  EXPECT_GT(beacon.accuracy, 0.9);
  EXPECT_NEAR(beacon.accuracy, beacon.oob_accuracy, 0.15);
  EXPECT_LT(identity.accuracy, beacon.accuracy);
}

TEST(OodTest, SkipsTextsTheSchemeCannotAlter) {
  ModelHandle handle(BeaconModel());
  auto texts = PlainTexts(40);
  texts.push_back("No marker here at all. None.");
  OodOptions opts;
  opts.forest.n_trees = 10;
  const OodResult r = RunOodScheme(handle, texts, RemoveTokenPerturbation("beacon"), opts);
  EXPECT_EQ(r.n_skipped, 1u);
  EXPECT_EQ(r.n_texts_used, 40u);
}

TEST(MeanStdTest, Values) {
  const std::vector<double> v = {2, 4, 4, 4, 5, 5, 7, 9};
  const MeanStd m = ComputeMeanStd(v);
  EXPECT_DOUBLE_EQ(m.mean, 5.0);
  EXPECT_NEAR(m.std, std::sqrt(32.0 / 7.0), 1e-12);
  const std::vector<double> one = {3.0};
  EXPECT_EQ(ComputeMeanStd(one).std, 0.0);
}

TEST(SegStatsTest, CountsSegmentsAndWords) {
  const std::vector<std::string> corpus = {"One two. Three four five six.", "Alone here.", "  "};
  const SegStats s = ComputeSegStats(corpus, SegmenterRegistry::Default().Get("sentence"));
  EXPECT_EQ(s.n_texts, 2u);
  EXPECT_EQ(s.n_skipped, 1u);
  EXPECT_DOUBLE_EQ(s.segments_per_text.mean, 1.5);
  // 8 word tokens over 2 sentences, 3 over 1.
  EXPECT_DOUBLE_EQ(s.words_per_segment.mean, (4.0 + 3.0) / 2.0);
  EXPECT_GE(s.seconds_per_text.mean, 0.0);
}

}  // namespace
}  // namespace gutek
