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
#include <span>
#include <string>
#include <vector>

namespace gutek {

// Sample of embedding vectors of one dimension.
struct EmbeddingSet {
  std::vector<std::vector<double>> vectors;
  std::vector<std::string> ids;  // optional; empty or parallel to vectors
  std::string label;

  size_t dim() const { return vectors.empty() ? 0 : vectors.front().size(); }
};

// JSONL, one {"id": str, "vector": [f64...]} per line.
EmbeddingSet LoadEmbeddingSet(const std::string& path);
void SaveEmbeddingSet(const EmbeddingSet& set, const std::string& path);

// Minimum-cost perfect matching on a square cost matrix (row-major, n*n),
// solved exactly with the shortest-augmenting-path Hungarian method in
// O(n^3). Returns assignment[row] = column.
std::vector<size_t> SolveAssignment(std::span<const double> cost, size_t n);

// Empirical 1-Wasserstein distance under Euclidean ground cost. Equal-size
// samples are matched exactly; otherwise the larger sample is first
// subsampled without replacement (seeded) to the smaller size.
// Throws Error(kEmptyDistribution) or Error(kDimensionError).
double Wasserstein1(const EmbeddingSet& p, const EmbeddingSet& q, uint64_t seed = 0);

}  // namespace gutek
