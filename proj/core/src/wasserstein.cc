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

#include "gutek/wasserstein.h"

#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>

#include "gutek/error.h"
#include "gutek/random.h"
#include "json.hpp"

namespace gutek {

EmbeddingSet LoadEmbeddingSet(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot read embedding file " + path);
  EmbeddingSet set;
  set.label = path;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object() || !j.contains("vector") ||
        !j["vector"].is_array()) {
      throw Error(ErrorCode::kParseError,
                  path + ":" + std::to_string(line_no) + ": expected {\"id\", \"vector\"}");
    }
    std::vector<double> v;
    for (const auto& x : j["vector"]) {
      if (!x.is_number()) {
        throw Error(ErrorCode::kParseError,
                    path + ":" + std::to_string(line_no) + ": non-numeric vector entry");
      }
      v.push_back(x.get<double>());
    }
    if (!set.vectors.empty() && v.size() != set.dim()) {
      throw Error(ErrorCode::kDimensionError,
                  path + ":" + std::to_string(line_no) + ": vector length " +
                      std::to_string(v.size()) + " differs from " + std::to_string(set.dim()));
    }
    set.ids.push_back(j.contains("id") && j["id"].is_string() ? j["id"].get<std::string>()
                                                              : std::to_string(line_no));
    set.vectors.push_back(std::move(v));
  }
  return set;
}

void SaveEmbeddingSet(const EmbeddingSet& set, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write embedding file " + path);
  for (size_t i = 0; i < set.vectors.size(); ++i) {
    const std::string id = i < set.ids.size() ? set.ids[i] : std::to_string(i);
    out << nlohmann::json{{"id", id}, {"vector", set.vectors[i]}}.dump() << '\n';
  }
}

std::vector<size_t> SolveAssignment(std::span<const double> cost, size_t n) {
  if (cost.size() != n * n) {
    throw Error(ErrorCode::kInvalidArgument, "cost matrix must be n*n");
  }
  // 1-based potentials formulation; column 0 is a virtual source.
  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<size_t> match(n + 1, 0), way(n + 1, 0);
  for (size_t row = 1; row <= n; ++row) {
    match[0] = row;
    size_t col0 = 0;
    std::vector<double> min_slack(n + 1, kInf);
    std::vector<bool> used(n + 1, false);
    do {
      used[col0] = true;
      const size_t r0 = match[col0];
      double delta = kInf;
      size_t col1 = 0;
      for (size_t c = 1; c <= n; ++c) {
        if (used[c]) continue;
        const double reduced = cost[(r0 - 1) * n + (c - 1)] - u[r0] - v[c];
        if (reduced < min_slack[c]) {
          min_slack[c] = reduced;
          way[c] = col0;
        }
        if (min_slack[c] < delta) {
          delta = min_slack[c];
          col1 = c;
        }
      }
      for (size_t c = 0; c <= n; ++c) {
        if (used[c]) {
          u[match[c]] += delta;
          v[c] -= delta;
        } else {
          min_slack[c] -= delta;
        }
      }
      col0 = col1;
    } while (match[col0] != 0);
    do {
      const size_t col1 = way[col0];
      match[col0] = match[col1];
      col0 = col1;
    } while (col0 != 0);
  }
  std::vector<size_t> assignment(n);
  for (size_t c = 1; c <= n; ++c) assignment[match[c] - 1] = c - 1;
  return assignment;
}

namespace {

double Euclidean(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (size_t k = 0; k < a.size(); ++k) {
    const double d = a[k] - b[k];
    s += d * d;
  }
  return std::sqrt(s);
}

std::vector<size_t> Subsample(size_t from, size_t to, uint64_t seed) {
  std::vector<size_t> idx(from);
  std::iota(idx.begin(), idx.end(), size_t{0});
  if (to < from) {
    Rng rng(seed);
    rng.Shuffle(std::span<size_t>(idx));
    idx.resize(to);
  }
  return idx;
}

}  // namespace

double Wasserstein1(const EmbeddingSet& p, const EmbeddingSet& q, uint64_t seed) {
  if (p.vectors.empty() || q.vectors.empty()) {
    throw Error(ErrorCode::kEmptyDistribution, "both samples must be non-empty");
  }
  for (const EmbeddingSet* s : {&p, &q}) {
    for (const auto& v : s->vectors) {
      if (v.size() != p.dim()) {
        throw Error(ErrorCode::kDimensionError,
                    "embedding dimensions differ (" + std::to_string(p.dim()) + " vs " +
                        std::to_string(v.size()) + ")");
      }
    }
  }
  const size_t n = std::min(p.vectors.size(), q.vectors.size());
  // Only the larger sample is thinned; both sides use stream 0.
  const std::vector<size_t> pi = Subsample(p.vectors.size(), n, DeriveSeed(seed, 0));
  const std::vector<size_t> qi = Subsample(q.vectors.size(), n, DeriveSeed(seed, 0));

  std::vector<double> cost(n * n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      cost[i * n + j] = Euclidean(p.vectors[pi[i]], q.vectors[qi[j]]);
    }
  }
  const std::vector<size_t> assignment = SolveAssignment(cost, n);
  double total = 0.0;
  for (size_t i = 0; i < n; ++i) total += cost[i * n + assignment[i]];
  return total / static_cast<double>(n);
}

}  // namespace gutek
