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

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <numeric>
#include <thread>

#include "gutek/error.h"
#include "gutek/random.h"

namespace gutek {

double DecisionTree::PredictProba(std::span<const double> x) const {
  int node = 0;
  while (nodes_[node].feature >= 0) {
    const TreeNode& n = nodes_[node];
    node = x[n.feature] <= n.threshold ? n.left : n.right;
  }
  return nodes_[node].positive_fraction;
}

int DecisionTree::depth() const {
  if (nodes_.empty()) return 0;
  std::vector<int> d(nodes_.size(), 0);
  int deepest = 0;
  // Children are always stored after their parent.
  for (size_t i = 0; i < nodes_.size(); ++i) {
    if (nodes_[i].feature >= 0) {
      d[nodes_[i].left] = d[i] + 1;
      d[nodes_[i].right] = d[i] + 1;
    }
    deepest = std::max(deepest, d[i]);
  }
  return deepest;
}

uint64_t DecisionTree::StructureHash() const {
  uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xFF;
      h *= 0x100000001b3ULL;
    }
  };
  for (const TreeNode& n : nodes_) {
    mix(static_cast<uint64_t>(static_cast<int64_t>(n.feature)));
    mix(std::bit_cast<uint64_t>(n.threshold));
    mix(static_cast<uint64_t>(static_cast<int64_t>(n.left)));
    mix(static_cast<uint64_t>(static_cast<int64_t>(n.right)));
    mix(std::bit_cast<uint64_t>(n.positive_fraction));
  }
  return h;
}

double ForestModel::PredictProba(std::span<const double> x) const {
  double s = 0.0;
  for (const DecisionTree& t : trees) s += t.PredictProba(x);
  return trees.empty() ? 0.0 : s / static_cast<double>(trees.size());
}

int ForestModel::Predict(std::span<const double> x) const {
  return PredictProba(x) > 0.5 ? 1 : 0;
}

double ForestModel::Accuracy(std::span<const std::vector<double>> x,
                             std::span<const int> y) const {
  if (x.empty()) return 0.0;
  size_t correct = 0;
  for (size_t i = 0; i < x.size(); ++i) correct += Predict(x[i]) == y[i] ? 1 : 0;
  return static_cast<double>(correct) / static_cast<double>(x.size());
}

namespace {

struct Sample {
  size_t index;
  double weight;  // bootstrap multiplicity
};

class TreeBuilder {
 public:
  TreeBuilder(std::span<const std::vector<double>> x, std::span<const int> y, int max_depth,
              size_t max_features, size_t min_samples_split, Rng& rng)
      : x_(x),
        y_(y),
        max_depth_(max_depth),
        max_features_(max_features),
        min_samples_split_(min_samples_split),
        rng_(rng),
        features_(x.front().size()) {
    std::iota(features_.begin(), features_.end(), size_t{0});
  }

  std::vector<TreeNode> Build(std::vector<Sample> samples) {
    nodes_.clear();
    Grow(samples, 0);
    return std::move(nodes_);
  }

 private:
  int Grow(std::vector<Sample>& samples, int depth) {
    double total = 0.0;
    double positive = 0.0;
    for (const Sample& s : samples) {
      total += s.weight;
      if (y_[s.index] == 1) positive += s.weight;
    }
    const int id = static_cast<int>(nodes_.size());
    nodes_.push_back(TreeNode{-1, 0.0, -1, -1, positive / total});

    if (depth >= max_depth_ || total < static_cast<double>(min_samples_split_) ||
        positive == 0.0 || positive == total) {
      return id;
    }

    // Partial Fisher-Yates: the first max_features_ entries form the subset.
    const size_t d = features_.size();
    for (size_t k = 0; k < max_features_; ++k) {
      const size_t j = k + rng_.UniformInt(d - k);
      std::swap(features_[k], features_[j]);
    }
    std::vector<size_t> candidates(features_.begin(), features_.begin() + max_features_);

    const double parent_gini = 1.0 - Square(positive / total) - Square(1.0 - positive / total);
    double best_gain = 1e-12;
    int best_feature = -1;
    double best_threshold = 0.0;
    std::vector<std::pair<double, size_t>> order(samples.size());
    for (size_t f : candidates) {
      for (size_t i = 0; i < samples.size(); ++i) {
        order[i] = {x_[samples[i].index][f], i};
      }
      std::sort(order.begin(), order.end());
      double left_total = 0.0;
      double left_pos = 0.0;
      for (size_t i = 0; i + 1 < order.size(); ++i) {
        const Sample& s = samples[order[i].second];
        left_total += s.weight;
        if (y_[s.index] == 1) left_pos += s.weight;
        if (order[i].first == order[i + 1].first) continue;
        const double right_total = total - left_total;
        const double right_pos = positive - left_pos;
        const double gini_left =
            1.0 - Square(left_pos / left_total) - Square(1.0 - left_pos / left_total);
        const double gini_right =
            1.0 - Square(right_pos / right_total) - Square(1.0 - right_pos / right_total);
        const double gain =
            parent_gini - (left_total * gini_left + right_total * gini_right) / total;
        if (gain > best_gain) {
          best_gain = gain;
          best_feature = static_cast<int>(f);
          best_threshold = 0.5 * (order[i].first + order[i + 1].first);
          // Midpoints can round onto the upper value; keep the split proper.
          if (best_threshold >= order[i + 1].first) best_threshold = order[i].first;
        }
      }
    }
    if (best_feature < 0) return id;

    std::vector<Sample> left;
    std::vector<Sample> right;
    for (const Sample& s : samples) {
      (x_[s.index][best_feature] <= best_threshold ? left : right).push_back(s);
    }
    samples.clear();
    samples.shrink_to_fit();
    const int l = Grow(left, depth + 1);
    const int r = Grow(right, depth + 1);
    nodes_[id].feature = best_feature;
    nodes_[id].threshold = best_threshold;
    nodes_[id].left = l;
    nodes_[id].right = r;
    return id;
  }

  static double Square(double v) { return v * v; }

  std::span<const std::vector<double>> x_;
  std::span<const int> y_;
  int max_depth_;
  size_t max_features_;
  size_t min_samples_split_;
  Rng& rng_;
  std::vector<size_t> features_;
  std::vector<TreeNode> nodes_;
};

void CheckInputs(std::span<const std::vector<double>> x, std::span<const int> y) {
  if (x.size() != y.size()) {
    throw Error(ErrorCode::kInvalidArgument, "features and labels differ in length");
  }
  size_t counts[2] = {0, 0};
  for (int label : y) {
    if (label != 0 && label != 1) {
      throw Error(ErrorCode::kDegenerateLabels, "labels must be 0 or 1");
    }
    ++counts[label];
  }
  if (counts[0] < 2 || counts[1] < 2) {
    throw Error(ErrorCode::kDegenerateLabels,
                "need at least two samples of each class (got " + std::to_string(counts[0]) +
                    " and " + std::to_string(counts[1]) + ")");
  }
  const size_t d = x.front().size();
  if (d == 0) throw Error(ErrorCode::kDimensionError, "feature vectors are empty");
  for (const auto& row : x) {
    if (row.size() != d) throw Error(ErrorCode::kDimensionError, "ragged feature matrix");
  }
}

struct GrownTree {
  DecisionTree tree;
  std::vector<uint8_t> in_bag;
};

}  // namespace

ForestModel FitForest(std::span<const std::vector<double>> x, std::span<const int> y,
                      int max_depth, const ForestOptions& options) {
  CheckInputs(x, y);
  if (options.n_trees == 0) throw Error(ErrorCode::kInvalidArgument, "need at least one tree");
  if (max_depth < 1) throw Error(ErrorCode::kInvalidArgument, "max depth must be >= 1");
  const size_t n = x.size();
  const size_t d = x.front().size();
  const size_t max_features = std::clamp<size_t>(
      options.max_features.value_or(static_cast<size_t>(std::sqrt(static_cast<double>(d)))),
      size_t{1}, d);

  std::vector<GrownTree> grown(options.n_trees);
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t t = next++; t < options.n_trees; t = next++) {
      Rng rng(DeriveSeed(options.seed, (static_cast<uint64_t>(max_depth) << 32) | t));
      std::vector<double> counts(n, 0.0);
      for (size_t i = 0; i < n; ++i) counts[rng.UniformInt(n)] += 1.0;
      std::vector<Sample> samples;
      grown[t].in_bag.assign(n, 0);
      for (size_t i = 0; i < n; ++i) {
        if (counts[i] > 0.0) {
          samples.push_back({i, counts[i]});
          grown[t].in_bag[i] = 1;
        }
      }
      TreeBuilder builder(x, y, max_depth, max_features, options.min_samples_split, rng);
      grown[t].tree = DecisionTree(builder.Build(std::move(samples)));
    }
  };
  size_t jobs = options.jobs == 0 ? std::max(1u, std::thread::hardware_concurrency())
                                  : options.jobs;
  jobs = std::min(jobs, options.n_trees);
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  ForestModel model;
  model.max_depth = max_depth;
  std::vector<double> oob_sum(n, 0.0);
  std::vector<size_t> oob_count(n, 0);
  for (GrownTree& g : grown) {
    for (size_t i = 0; i < n; ++i) {
      if (g.in_bag[i]) continue;
      oob_sum[i] += g.tree.PredictProba(x[i]);
      ++oob_count[i];
    }
    model.trees.push_back(std::move(g.tree));
  }
  size_t scored = 0;
  size_t correct = 0;
  for (size_t i = 0; i < n; ++i) {
    if (oob_count[i] == 0) continue;
    ++scored;
    const int pred = oob_sum[i] / static_cast<double>(oob_count[i]) > 0.5 ? 1 : 0;
    correct += pred == y[i] ? 1 : 0;
  }
  model.oob_accuracy =
      scored > 0 ? static_cast<double>(correct) / static_cast<double>(scored) : 0.0;
  model.depth_scores.push_back({max_depth, model.oob_accuracy});
  return model;
}

ForestModel TrainForest(std::span<const std::vector<double>> x, std::span<const int> y,
                        const ForestOptions& options) {
  CheckInputs(x, y);
  if (options.depth_grid.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "depth grid is empty");
  }
  ForestModel best;
  std::vector<DepthScore> scores;
  bool have_best = false;
  for (int depth : options.depth_grid) {
    ForestModel candidate = FitForest(x, y, depth, options);
    scores.push_back({depth, candidate.oob_accuracy});
    if (!have_best || candidate.oob_accuracy > best.oob_accuracy) {
      best = std::move(candidate);
      have_best = true;
    }
  }
  best.depth_scores = std::move(scores);
  return best;
}

}  // namespace gutek
