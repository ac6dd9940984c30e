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

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>

#include "gutek/error.h"
#include "gutek/neighborhood.h"
#include "gutek/unicode.h"

namespace gutek {

namespace {

// Removes `k` distinct random units of `doc`; nullopt if doc has <= k units.
std::optional<std::string> RemoveRandomUnits(const Document& doc, size_t k, Rng& rng) {
  if (doc.size() <= k) return std::nullopt;
  std::vector<size_t> idx(doc.size());
  std::iota(idx.begin(), idx.end(), size_t{0});
  rng.Shuffle(std::span<size_t>(idx));
  SegmentMask mask = SegmentMask::AllOnes(doc.size());
  for (size_t i = 0; i < k; ++i) mask.bits[idx[i]] = 0;
  return Reconstruct(doc, mask);
}

}  // namespace

Perturbation IdentityPerturbation() {
  return {"identity", [](const std::string& text, Rng&) -> std::optional<std::string> {
            return text;
          }};
}

Perturbation RemoveWordsPerturbation(size_t k) {
  return {"remove_" + std::to_string(k) + "_words",
          [k](const std::string& text, Rng& rng) {
            return RemoveRandomUnits(SplitWords(text), k, rng);
          }};
}

Perturbation RemoveSentencePerturbation(std::shared_ptr<const AbbreviationSet> abbreviations) {
  return {"remove_one_sentence",
          [abbreviations](const std::string& text, Rng& rng) {
            return RemoveRandomUnits(SplitSentences(text, *abbreviations), 1, rng);
          }};
}

Perturbation RemoveTokenPerturbation(std::string token) {
  const std::string needle = unicode::AsciiLower(token);
  return {"remove_token_" + token,
          [needle](const std::string& text, Rng&) -> std::optional<std::string> {
            const Document doc = SplitWords(text);
            SegmentMask mask = SegmentMask::AllOnes(doc.size());
            bool found = false;
            for (size_t i = 0; i < doc.size(); ++i) {
              if (unicode::AsciiLower(doc.SegmentText(i)) == needle) {
                mask.bits[i] = 0;
                found = true;
              }
            }
            if (!found) return std::nullopt;
            return Reconstruct(doc, mask);
          }};
}

OodResult RunOodScheme(ModelHandle& model, std::span<const std::string> texts,
                       const Perturbation& scheme, const OodOptions& options) {
  if (!(options.test_fraction > 0.0 && options.test_fraction < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "test fraction must lie in (0, 1)");
  }
  OodResult result;
  result.scheme = scheme.name;

  std::vector<std::string> originals;
  std::vector<std::string> altered;
  for (size_t i = 0; i < texts.size(); ++i) {
    Rng rng(DeriveSeed(options.seed, i));
    std::optional<std::string> a = scheme.apply(texts[i], rng);
    if (!a) {
      ++result.n_skipped;
      continue;
    }
    originals.push_back(texts[i]);
    altered.push_back(std::move(*a));
  }
  result.n_texts_used = originals.size();
  if (originals.size() < 4) {
    throw Error(ErrorCode::kDegenerateLabels,
                "scheme '" + scheme.name + "' left only " + std::to_string(originals.size()) +
                    " usable texts");
  }

  const std::vector<EmbeddingVector> e_orig = model.EmbedAll(originals);
  const std::vector<EmbeddingVector> e_alt = model.EmbedAll(altered);
  std::vector<std::vector<double>> x;
  std::vector<int> y;
  x.reserve(2 * originals.size());
  for (const auto& e : e_orig) {
    x.push_back(e.values);
    y.push_back(0);
  }
  for (const auto& e : e_alt) {
    x.push_back(e.values);
    y.push_back(1);
  }

  // A text and its altered copy share a side of the split.
  const size_t n_texts = originals.size();
  std::vector<size_t> order(n_texts);
  std::iota(order.begin(), order.end(), size_t{0});
  Rng split_rng(DeriveSeed(options.seed, 0xFFFF'FFFFULL));
  split_rng.Shuffle(std::span<size_t>(order));
  const auto n_test_texts = static_cast<size_t>(
      std::llround(options.test_fraction * static_cast<double>(n_texts)));
  std::vector<std::vector<double>> x_train, x_test;
  std::vector<int> y_train, y_test;
  for (size_t r = 0; r < n_texts; ++r) {
    for (const size_t i : {order[r], order[r] + n_texts}) {
      if (r < n_test_texts) {
        x_test.push_back(x[i]);
        y_test.push_back(y[i]);
      } else {
        x_train.push_back(x[i]);
        y_train.push_back(y[i]);
      }
    }
  }
  result.n_train = x_train.size();
  result.n_test = x_test.size();

  ForestOptions forest = options.forest;
  forest.seed = DeriveSeed(options.seed, 0xF0F0);
  const ForestModel model_fit = TrainForest(x_train, y_train, forest);
  result.selected_depth = model_fit.max_depth;
  result.oob_accuracy = model_fit.oob_accuracy;
  result.accuracy = model_fit.Accuracy(x_test, y_test);
  return result;
}

std::pair<OodResult, OodResult> RunOodExperiment(ModelHandle& model,
                                                 std::span<const std::string> texts,
                                                 const Perturbation& scheme_a,
                                                 const Perturbation& scheme_b,
                                                 const OodOptions& options) {
  OodOptions b = options;
  b.seed = DeriveSeed(options.seed, 0xB);
  return {RunOodScheme(model, texts, scheme_a, options), RunOodScheme(model, texts, scheme_b, b)};
}

MeanStd ComputeMeanStd(std::span<const double> values) {
  MeanStd out;
  if (values.empty()) return out;
  const double n = static_cast<double>(values.size());
  out.mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
  if (values.size() < 2) return out;
  double ss = 0.0;
  for (double v : values) ss += (v - out.mean) * (v - out.mean);
  out.std = std::sqrt(ss / (n - 1.0));
  return out;
}

SegStats ComputeSegStats(std::span<const std::string> corpus, const Segmenter& segmenter) {
  std::vector<double> segments;
  std::vector<double> words_per_segment;
  std::vector<double> seconds;
  SegStats stats;
  for (const std::string& text : corpus) {
    const auto start = std::chrono::steady_clock::now();
    const Document doc = segmenter.Split(text);
    const auto stop = std::chrono::steady_clock::now();
    if (doc.empty()) {
      ++stats.n_skipped;
      continue;
    }
    const double n_words = static_cast<double>(SplitWords(text).size());
    segments.push_back(static_cast<double>(doc.size()));
    words_per_segment.push_back(n_words / static_cast<double>(doc.size()));
    seconds.push_back(std::chrono::duration<double>(stop - start).count());
  }
  stats.n_texts = segments.size();
  stats.segments_per_text = ComputeMeanStd(segments);
  stats.words_per_segment = ComputeMeanStd(words_per_segment);
  stats.seconds_per_text = ComputeMeanStd(seconds);
  return stats;
}

}  // namespace gutek
