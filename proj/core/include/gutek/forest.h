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

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace gutek {

struct TreeNode {
  int feature = -1;  // -1 marks a leaf
  double threshold = 0.0;  // go left when x[feature] <= threshold
  int left = -1;
  int right = -1;
  double positive_fraction = 0.0;  // weighted share of label 1 in the node
};

// CART classification tree for binary labels with gini impurity.
class DecisionTree {
 public:
  DecisionTree() = default;
  explicit DecisionTree(std::vector<TreeNode> nodes) : nodes_(std::move(nodes)) {}

  double PredictProba(std::span<const double> x) const;
  int depth() const;
  size_t node_count() const { return nodes_.size(); }
  const std::vector<TreeNode>& nodes() const { return nodes_; }

  // FNV-1a digest of the tree's structure and parameters.
  uint64_t StructureHash() const;

 private:
  std::vector<TreeNode> nodes_;
};

struct ForestOptions {
  size_t n_trees = 100;
  std::vector<int> depth_grid = {2, 5, 7, 10, 15, 20};
  uint64_t seed = 0;
  size_t min_samples_split = 2;
  // Features tried per split; default max(1, floor(sqrt(d))).
  std::optional<size_t> max_features;
  size_t jobs = 1;  // 0 uses all hardware threads
};

struct DepthScore {
  int max_depth = 0;
  double oob_accuracy = 0.0;
};

struct ForestModel {
  std::vector<DecisionTree> trees;
  int max_depth = 0;
  double oob_accuracy = 0.0;
  std::vector<DepthScore> depth_scores;  // one per grid entry

  double PredictProba(std::span<const double> x) const;
  int Predict(std::span<const double> x) const;  // ties go to 0
  double Accuracy(std::span<const std::vector<double>> x, std::span<const int> y) const;
};

// Bagged forest of depth-limited trees (bootstrap samples, random feature
// subsets per split). Trees are grown in parallel from per-tree seeds, so
// the result is independent of `jobs`.
ForestModel FitForest(std::span<const std::vector<double>> x, std::span<const int> y,
                      int max_depth, const ForestOptions& options);

// Fits one forest per depth in options.depth_grid and keeps the one with the
// best out-of-bag accuracy (ties go to the earlier grid entry). Labels must
// be 0/1 with at least two samples of each; otherwise throws
// Error(kDegenerateLabels).
ForestModel TrainForest(std::span<const std::vector<double>> x, std::span<const int> y,
                        const ForestOptions& options = {});

}  // namespace gutek
