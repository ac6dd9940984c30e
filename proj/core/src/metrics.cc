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

#include "gutek/metrics.h"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "gutek/error.h"

namespace gutek {

namespace {

std::set<size_t> CheckedTruth(std::span<const double> scores,
                              std::span<const size_t> ground_truth) {
  if (scores.empty()) throw Error(ErrorCode::kEmptyScores, "score vector is empty");
  if (ground_truth.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "ground truth must name at least one unit");
  }
  std::set<size_t> gt(ground_truth.begin(), ground_truth.end());
  if (*gt.rbegin() >= scores.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "ground-truth index " + std::to_string(*gt.rbegin()) + " out of range");
  }
  return gt;
}

}  // namespace

double Iou(std::span<const double> scores, std::span<const size_t> ground_truth) {
  const std::set<size_t> gt = CheckedTruth(scores, ground_truth);
  const double best = *std::max_element(scores.begin(), scores.end());
  size_t pred = 0;
  size_t inter = 0;
  for (size_t i = 0; i < scores.size(); ++i) {
    if (scores[i] != best) continue;
    ++pred;
    if (gt.contains(i)) ++inter;
  }
  const size_t uni = pred + gt.size() - inter;
  return static_cast<double>(inter) / static_cast<double>(uni);
}

double Hpd(std::span<const double> scores, std::span<const size_t> ground_truth) {
  const std::set<size_t> gt = CheckedTruth(scores, ground_truth);
  std::vector<size_t> order(scores.size());
  std::iota(order.begin(), order.end(), size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](size_t a, size_t b) { return scores[a] > scores[b]; });
  for (size_t r = 0; r < order.size(); ++r) {
    if (gt.contains(order[r])) return 1.0 / static_cast<double>(r + 1);
  }
  return 0.0;  // unreachable: gt is non-empty and in range
}

std::optional<double> Snr(std::span<const double> scores,
                          std::span<const size_t> ground_truth) {
  const std::set<size_t> gt = CheckedTruth(scores, ground_truth);
  double signal = 0.0;
  std::vector<double> noise;
  for (size_t i = 0; i < scores.size(); ++i) {
    if (gt.contains(i)) {
      signal += scores[i];
    } else {
      noise.push_back(scores[i]);
    }
  }
  if (noise.size() < 2) return std::nullopt;
  // Constant noise is detected exactly.
  if (std::all_of(noise.begin(), noise.end(), [&](double v) { return v == noise.front(); })) {
    return std::nullopt;
  }
  signal /= static_cast<double>(gt.size());
  const double mean =
      std::accumulate(noise.begin(), noise.end(), 0.0) / static_cast<double>(noise.size());
  double ss = 0.0;
  for (double v : noise) ss += (v - mean) * (v - mean);
  const double variance = ss / static_cast<double>(noise.size() - 1);
  if (!(variance > 0.0)) return std::nullopt;
  return signal * signal / variance;
}

EvalRecord Evaluate(std::vector<double> scores, std::vector<size_t> ground_truth) {
  EvalRecord r;
  r.iou = Iou(scores, ground_truth);
  r.hpd = Hpd(scores, ground_truth);
  r.snr = Snr(scores, ground_truth);
  r.scores = std::move(scores);
  r.ground_truth = std::move(ground_truth);
  return r;
}

MetricReport Aggregate(std::span<const EvalRecord> records) {
  MetricReport report;
  report.n_examples = records.size();
  if (records.empty()) return report;
  double iou = 0.0;
  double hpd = 0.0;
  double snr = 0.0;
  size_t snr_count = 0;
  for (const EvalRecord& r : records) {
    iou += r.iou;
    hpd += r.hpd;
    if (r.snr) {
      snr += *r.snr;
      ++snr_count;
    } else {
      ++report.n_snr_omitted;
    }
  }
  const double n = static_cast<double>(records.size());
  report.mean_iou = 100.0 * iou / n;
  report.mean_hpd = 100.0 * hpd / n;
  // SNR is a ratio, shown without rescaling.
  report.mean_snr = snr_count > 0 ? snr / static_cast<double>(snr_count) : 0.0;
  return report;
}

}  // namespace gutek
