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

#include "gutek/forest.h"

#include <gtest/gtest.h>

#include "gutek/error.h"
#include "gutek/random.h"

namespace gutek {
namespace {

struct Data {
  std::vector<std::vector<double>> x;
  std::vector<int> y;
};

// Two Gaussian blobs `gap` apart along every axis.
Data Blobs(Rng& rng, size_t n, size_t dim, double gap) {
  Data d;
  for (size_t i = 0; i < n; ++i) {
    const int label = static_cast<int>(i % 2);
    std::vector<double> v(dim);
    for (double& x : v) x = rng.Normal() + gap * label;
    d.x.push_back(v);
    d.y.push_back(label);
  }
  return d;
}

TEST(DecisionTreeTest, HandBuiltTree) {
  const DecisionTree tree({{0, 0.5, 1, 2, 0.5}, {-1, 0, -1, -1, 0.1}, {-1, 0, -1, -1, 0.9}});
  const std::vector<double> lo = {0.2}, hi = {0.7};
  EXPECT_EQ(tree.PredictProba(lo), 0.1);
  EXPECT_EQ(tree.PredictProba(hi), 0.9);
  EXPECT_EQ(tree.depth(), 1);
  EXPECT_EQ(tree.node_count(), 3u);
}

TEST(ForestTest, SeparableBlobs) {
  Rng rng(1);
  const Data train = Blobs(rng, 400, 4, 3.0);
  const Data test = Blobs(rng, 400, 4, 3.0);
  const ForestModel model = TrainForest(train.x, train.y, {.n_trees = 50, .seed = 3});
  EXPECT_GT(model.Accuracy(test.x, test.y), 0.95);
  EXPECT_GT(model.oob_accuracy, 0.95);
  EXPECT_EQ(model.depth_scores.size(), 6u);
}

TEST(ForestTest, RandomLabelsStayNearChance) {
  Rng rng(2);
  Data train = Blobs(rng, 500, 4, 0.0);
  Data test = Blobs(rng, 500, 4, 0.0);
  for (int& y : train.y) y = static_cast<int>(rng.UniformInt(2));
  for (int& y : test.y) y = static_cast<int>(rng.UniformInt(2));
  const ForestModel model = TrainForest(train.x, train.y, {.n_trees = 50, .seed = 4});
  const double acc = model.Accuracy(test.x, test.y);
  EXPECT_GE(acc, 0.4);
  EXPECT_LE(acc, 0.6);
}

TEST(ForestTest, OobTracksHeldOutAccuracy) {
  Rng rng(5);
  const Data train = Blobs(rng, 300, 3, 1.0);
  const Data test = Blobs(rng, 300, 3, 1.0);
  const ForestModel model = TrainForest(train.x, train.y, {.n_trees = 60, .seed = 6});
  EXPECT_NEAR(model.Accuracy(test.x, test.y), model.oob_accuracy, 0.15);
}

TEST(ForestTest, DeterministicAcrossThreadCounts) {
  Rng rng(9);
  const Data d = Blobs(rng, 200, 5, 1.5);
  ForestOptions serial{.n_trees = 20, .seed = 11, .jobs = 1};
  ForestOptions parallel = serial;
  parallel.jobs = 4;
  const ForestModel a = FitForest(d.x, d.y, 7, serial);
  const ForestModel b = FitForest(d.x, d.y, 7, parallel);
  ASSERT_EQ(a.trees.size(), b.trees.size());
  for (size_t t = 0; t < a.trees.size(); ++t) {
    EXPECT_EQ(a.trees[t].StructureHash(), b.trees[t].StructureHash());
  }
  EXPECT_EQ(a.oob_accuracy, b.oob_accuracy);
  for (const auto& tree : a.trees) EXPECT_LE(tree.depth(), 7);
  const ForestModel c = FitForest(d.x, d.y, 7, {.n_trees = 20, .seed = 12});
  EXPECT_NE(a.trees[0].StructureHash(), c.trees[0].StructureHash());
}

TEST(ForestTest, DegenerateLabels) {
  const std::vector<std::vector<double>> x = {{0.0}, {1.0}, {2.0}, {3.0}};
  for (const std::vector<int>& y :
       {std::vector<int>{0, 0, 0, 0}, std::vector<int>{0, 0, 0, 1}, std::vector<int>{0, 2, 1, 1}}) {
    try {
      TrainForest(x, y);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kDegenerateLabels);
    }
  }
}

}  // namespace
}  // namespace gutek
