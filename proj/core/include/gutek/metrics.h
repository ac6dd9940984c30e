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

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace gutek {

// Fidelity of one explanation against its ground-truth sentences.
struct EvalRecord {
  std::vector<double> scores;
  std::vector<size_t> ground_truth;
  double iou = 0.0;
  double hpd = 0.0;
  std::optional<double> snr;
};

// Dataset-level means. IoU and HPD are reported x100; SNR is averaged over
// the examples where it is defined.
struct MetricReport {
  double mean_iou = 0.0;
  double mean_hpd = 0.0;
  double mean_snr = 0.0;
  size_t n_examples = 0;
  size_t n_snr_omitted = 0;
};

// |argmax set ∩ gt| / |argmax set ∪ gt|, where the argmax set holds every
// index attaining the maximum score.
double Iou(std::span<const double> scores, std::span<const size_t> ground_truth);

// 1 / rank of the best-ranked ground-truth index; ranks sort scores
// descending with ties broken by ascending index.
double Hpd(std::span<const double> scores, std::span<const size_t> ground_truth);

// (mean gt score)^2 / unbiased variance of the remaining scores; nullopt with
// fewer than two remaining scores or zero variance.
std::optional<double> Snr(std::span<const double> scores, std::span<const size_t> ground_truth);

// Validates inputs and fills all three metrics.
EvalRecord Evaluate(std::vector<double> scores, std::vector<size_t> ground_truth);

MetricReport Aggregate(std::span<const EvalRecord> records);

}  // namespace gutek
