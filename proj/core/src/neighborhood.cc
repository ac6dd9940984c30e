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

#include "gutek/neighborhood.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "gutek/error.h"
#include "gutek/random.h"

namespace gutek {

size_t SegmentMask::removed() const {
  return static_cast<size_t>(std::count(bits.begin(), bits.end(), uint8_t{0}));
}

std::string ToString(const SegmentMask& mask) {
  std::string out;
  out.reserve(mask.size());
  for (uint8_t b : mask.bits) out.push_back(b ? '1' : '0');
  return out;
}

std::vector<SegmentMask> EnumerateLocalMasks(size_t n_units, uint64_t budget) {
  if (n_units == 0) {
    throw Error(ErrorCode::kEmptyDocument, "cannot enumerate masks over zero units");
  }
  if (budget == 0) throw Error(ErrorCode::kInvalidArgument, "budget must be at least 1");

  std::vector<SegmentMask> masks;
  masks.reserve(static_cast<size_t>(std::min<uint64_t>(budget, 1u << 20)));
  for (size_t k = 0; k <= n_units && masks.size() < budget; ++k) {
    // Walk k-subsets of {0..n-1} in lexicographic order.
    std::vector<size_t> removed(k);
    std::iota(removed.begin(), removed.end(), size_t{0});
    while (masks.size() < budget) {
      SegmentMask m = SegmentMask::AllOnes(n_units);
      for (size_t idx : removed) m.bits[idx] = 0;
      masks.push_back(std::move(m));

      size_t i = k;
      while (i > 0 && removed[i - 1] == n_units - k + i - 1) --i;
      if (i == 0) break;
      ++removed[i - 1];
      for (size_t j = i; j < k; ++j) removed[j] = removed[j - 1] + 1;
    }
  }
  return masks;
}

double KernelWeight(double removed_fraction, double kernel_width) {
  return std::exp(-(removed_fraction * removed_fraction) / (kernel_width * kernel_width));
}

std::vector<WeightedMask> SampleWordMasks(size_t n_units, uint64_t budget, uint64_t seed,
                                          double kernel_width) {
  if (n_units == 0) {
    throw Error(ErrorCode::kEmptyDocument, "cannot sample masks over zero units");
  }
  if (budget == 0) throw Error(ErrorCode::kInvalidArgument, "budget must be at least 1");
  if (!(kernel_width > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "kernel width must be positive");
  }
  std::vector<WeightedMask> out;
  out.reserve(budget);
  out.push_back({SegmentMask::AllOnes(n_units), 1.0});
  Rng rng(seed);
  const double n = static_cast<double>(n_units);
  for (uint64_t s = 1; s < budget; ++s) {
    SegmentMask m;
    m.bits.resize(n_units);
    for (auto& b : m.bits) b = rng.FairCoin() ? 1 : 0;
    const double d = static_cast<double>(m.removed()) / n;
    out.push_back({std::move(m), KernelWeight(d, kernel_width)});
  }
  return out;
}

std::string Reconstruct(const Document& doc, const SegmentMask& mask) {
  if (mask.size() != doc.size()) {
    throw Error(ErrorCode::kMaskMismatch,
                "mask has " + std::to_string(mask.size()) + " bits for a document of " +
                    std::to_string(doc.size()) + " units");
  }
  std::string out;
  out.reserve(doc.text().size());
  for (size_t i = 0; i < doc.size(); ++i) {
    if (!mask.bits[i]) continue;
    if (!out.empty()) out.push_back(' ');
    out.append(doc.SegmentText(i));
  }
  return out;
}

NeighborhoodStats ComputeNeighborhoodStats(double n_units, uint64_t budget) {
  if (!(n_units >= 0.0) || !std::isfinite(n_units)) {
    throw Error(ErrorCode::kInvalidArgument, "unit count must be finite and non-negative");
  }
  if (budget == 0) throw Error(ErrorCode::kInvalidArgument, "budget must be at least 1");
  NeighborhoodStats s;
  s.n_units = n_units;
  s.log2_size = n_units;
  s.log10_size = n_units * std::log10(2.0);
  s.size = std::exp2(n_units);
  s.budget = budget;
  const double log2_fraction = std::log2(static_cast<double>(budget)) - n_units;
  s.explored_fraction = log2_fraction >= 0.0 ? 1.0 : std::exp2(log2_fraction);
  return s;
}

}  // namespace gutek
