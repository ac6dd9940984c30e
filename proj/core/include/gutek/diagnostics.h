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
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gutek/forest.h"
#include "gutek/model_handle.h"
#include "gutek/random.h"
#include "gutek/segmentation.h"

namespace gutek {

// A text alteration used to build "original vs altered" datasets. apply()
// returns nullopt when the text is too short for the alteration.
struct Perturbation {
  std::string name;
  std::function<std::optional<std::string>(const std::string& text, Rng& rng)> apply;
};

Perturbation IdentityPerturbation();
// Removes k distinct random word tokens; needs more than k tokens.
Perturbation RemoveWordsPerturbation(size_t k);
// Removes one random sentence; needs at least two sentences.
Perturbation RemoveSentencePerturbation(
    std::shared_ptr<const AbbreviationSet> abbreviations = AbbreviationSet::Bundled());
// Removes every token equal (case-insensitively) to `token`; texts without
// the token are skipped.
Perturbation RemoveTokenPerturbation(std::string token);

struct OodOptions {
  ForestOptions forest;
  double test_fraction = 0.25;
  uint64_t seed = 0;
};

struct OodResult {
  std::string scheme;
  double accuracy = 0.0;  // held-out
  double oob_accuracy = 0.0;
  int selected_depth = 0;
  size_t n_texts_used = 0;
  size_t n_skipped = 0;
  size_t n_train = 0;
  size_t n_test = 0;
};

// Embeds every text and its altered copy, labels them 0 (original) and 1
// (altered), splits the texts at random into train/test (a text and its
// altered copy always land on the same side), selects the
// forest depth by OOB accuracy on train and reports test accuracy.
OodResult RunOodScheme(ModelHandle& model, std::span<const std::string> texts,
                       const Perturbation& scheme, const OodOptions& options);

std::pair<OodResult, OodResult> RunOodExperiment(ModelHandle& model,
                                                 std::span<const std::string> texts,
                                                 const Perturbation& scheme_a,
                                                 const Perturbation& scheme_b,
                                                 const OodOptions& options);

struct MeanStd {
  double mean = 0.0;
  double std = 0.0;  // sample (n - 1) deviation; 0 for a single value
};

MeanStd ComputeMeanStd(std::span<const double> values);

struct SegStats {
  MeanStd segments_per_text;
  MeanStd words_per_segment;
  MeanStd seconds_per_text;
  size_t n_texts = 0;
  size_t n_skipped = 0;  // texts that produced no segments
};

// Words are counted with the word tokenizer.
SegStats ComputeSegStats(std::span<const std::string> corpus, const Segmenter& segmenter);

}  // namespace gutek
