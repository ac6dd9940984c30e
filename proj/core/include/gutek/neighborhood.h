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
#include <string>
#include <vector>

#include "gutek/model.h"
#include "gutek/segmentation.h"

namespace gutek {

// Presence vector over a Document's units; 1 keeps the unit.
struct SegmentMask {
  std::vector<uint8_t> bits;

  static SegmentMask AllOnes(size_t n) { return SegmentMask{std::vector<uint8_t>(n, 1)}; }
  size_t size() const { return bits.size(); }
  size_t removed() const;

  friend bool operator==(const SegmentMask&, const SegmentMask&) = default;
  friend auto operator<=>(const SegmentMask&, const SegmentMask&) = default;
};

// "1101"-style rendering, unit 0 first.
std::string ToString(const SegmentMask& mask);

struct WeightedMask {
  SegmentMask mask;
  double kernel_weight = 1.0;
};

struct PerturbationRecord {
  SegmentMask mask;
  std::string text;
  ModelOutput output;
  double kernel_weight = 1.0;
};

struct NeighborhoodStats {
  double n_units = 0.0;
  double log2_size = 0.0;
  double size = 0.0;  // 2^n_units; +inf once it leaves double range
  double log10_size = 0.0;
  uint64_t budget = 0;
  double explored_fraction = 0.0;
};

inline constexpr double kDefaultKernelWidth = 0.25;

// Masks in order of increasing number of removed units; within a layer the
// removed-index sets appear in lexicographic order. The unperturbed mask is
// always first. Returns min(budget, 2^n_units) distinct masks.
// Throws Error(kEmptyDocument) for n_units == 0.
std::vector<SegmentMask> EnumerateLocalMasks(size_t n_units, uint64_t budget);

// First mask all-ones, then budget - 1 masks with independent fair bits.
// Weight exp(-d^2 / width^2) with d the fraction of units removed.
std::vector<WeightedMask> SampleWordMasks(size_t n_units, uint64_t budget, uint64_t seed,
                                          double kernel_width = kDefaultKernelWidth);

double KernelWeight(double removed_fraction, double kernel_width = kDefaultKernelWidth);

// Surviving units joined by single spaces. Throws Error(kMaskMismatch) if the
// mask length differs from the document size.
std::string Reconstruct(const Document& doc, const SegmentMask& mask);

// Neighborhood size 2^n_units and the share covered by `budget` samples,
// computed in log space.
NeighborhoodStats ComputeNeighborhoodStats(double n_units, uint64_t budget);

}  // namespace gutek
