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

#include "gutek/eval.h"
#include "gutek/naive_bayes.h"

namespace gutek {

// Word lists for the synthetic corpora. Under the model trained by
// SyntheticTrainingCorpus(), filler words have equal class means, weak words lean
// mildly toward one class and marker words carry strong evidence.
struct SyntheticVocabulary {
  std::vector<std::string> filler;
  std::vector<std::string> positive;
  std::vector<std::string> negative;
  std::vector<std::string> weak_positive;
  std::vector<std::string> weak_negative;
};

const SyntheticVocabulary& DefaultSyntheticVocabulary();

inline constexpr const char kSyntheticPositive[] = "pos";
inline constexpr const char kSyntheticNegative[] = "neg";

struct SyntheticOptions {
  uint64_t seed = 7;
  size_t min_sentence_words = 8;
  size_t max_sentence_words = 16;
  size_t max_weak_words = 2;  // per sentence, drawn from either polarity
  size_t markers = 2;         // in the ground-truth sentence
};

// Mirrored training corpus: every positive document has a negative twin
// with the same filler words, so filler terms get identical likelihoods in
// both classes. A weak word seen in one twin reappears in the other twin
// two times out of three.
std::vector<LabeledText> SyntheticTrainingCorpus(size_t n_pairs,
                                                 const SyntheticOptions& options = {});

// Fidelity task whose contexts hold 3 to 7 filler sentences sprinkled with
// weak words; exactly one sentence also holds class markers and is the
// ground truth.
FidelityTask SyntheticFidelityTask(size_t n_examples, const SyntheticOptions& options = {});

struct LongTextCorpus {
  std::vector<std::string> positive;
  std::vector<std::string> negative;
};

// Blank-line separated multi-sentence paragraphs, at least min_chars long;
// a single paragraph per text carries class markers.
LongTextCorpus SyntheticLongTexts(size_t n_per_class, size_t min_chars = 1000,
                                  const SyntheticOptions& options = {});

}  // namespace gutek
