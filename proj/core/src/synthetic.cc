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

#include "gutek/synthetic.h"

#include <algorithm>
#include <tuple>

#include "gutek/random.h"

namespace gutek {

const SyntheticVocabulary& DefaultSyntheticVocabulary() {
  static const SyntheticVocabulary* vocab = new SyntheticVocabulary{
      {"the",      "film",     "story",   "camera",   "scene",    "actor",   "director",
       "music",    "plot",     "character", "screen", "audience", "studio",  "evening",
       "city",     "house",    "window",  "train",    "letter",   "garden",  "river",
       "winter",   "summer",   "morning", "friend",   "brother",  "sister",  "mother",
       "father",   "village",  "road",    "journey",  "dinner",   "table",   "chair",
       "book",     "chapter",  "minute",  "hour",     "moment",   "voice",   "song",
       "dance",    "street",   "car",     "office",   "doctor",   "teacher", "student",
       "school",   "lesson",   "question", "answer",  "picture",  "color",   "light",
       "shadow",   "door",     "room",    "kitchen",  "market",   "harbor",  "island",
       "mountain", "valley",   "forest",  "bridge",   "tower",    "castle",  "soldier",
       "captain",  "sailor",   "painter", "writer",   "reader",   "and",     "with",
       "from",     "into",     "over",    "under",    "after",    "before",  "while",
       "then",     "again",    "slowly",  "quietly",  "later",    "often",   "walks",
       "talks",    "waits",    "looks",   "turns",    "opens",    "closes",  "returns",
       "carries",  "follows",  "meets",   "leaves",   "watches",  "finds"},
      {"wonderful", "excellent", "superb", "delightful", "brilliant", "charming", "moving",
       "masterful"},
      {"awful", "terrible", "dreadful", "boring", "clumsy", "tedious", "painful", "hollow"},
      {"bright", "warm", "gentle", "lively", "fresh", "graceful"},
      {"dull", "cold", "grey", "heavy", "stale", "awkward"},
  };
  return *vocab;
}

namespace {

std::vector<std::string> FillerWords(Rng& rng, const SyntheticOptions& o) {
  const auto& filler = DefaultSyntheticVocabulary().filler;
  const size_t n = o.min_sentence_words +
                   rng.UniformInt(o.max_sentence_words - o.min_sentence_words + 1);
  std::vector<std::string> words;
  words.reserve(n);
  for (size_t i = 0; i < n; ++i) words.push_back(filler[rng.UniformInt(filler.size())]);
  return words;
}

void InsertWord(std::vector<std::string>& words, std::string word, Rng& rng) {
  const size_t at = rng.UniformInt(words.size() + 1);
  words.insert(words.begin() + static_cast<std::ptrdiff_t>(at), std::move(word));
}

const std::vector<std::string>& Weak(bool positive) {
  const SyntheticVocabulary& v = DefaultSyntheticVocabulary();
  return positive ? v.weak_positive : v.weak_negative;
}

void AddWeakWords(std::vector<std::string>& words, Rng& rng, const SyntheticOptions& o) {
  const size_t n = rng.UniformInt(o.max_weak_words + 1);
  for (size_t i = 0; i < n; ++i) {
    const auto& weak = Weak(rng.FairCoin());
    InsertWord(words, weak[rng.UniformInt(weak.size())], rng);
  }
}

std::string Render(const std::vector<std::string>& words) {
  std::string out;
  for (size_t i = 0; i < words.size(); ++i) {
    if (i > 0) out += ' ';
    out += words[i];
  }
  if (!out.empty() && out[0] >= 'a' && out[0] <= 'z') out[0] = static_cast<char>(out[0] - 32);
  out += '.';
  return out;
}

const std::vector<std::string>& Markers(bool positive) {
  const SyntheticVocabulary& v = DefaultSyntheticVocabulary();
  return positive ? v.positive : v.negative;
}

std::string Paragraph(const std::vector<std::string>& sentences) {
  std::string out;
  for (size_t i = 0; i < sentences.size(); ++i) {
    if (i > 0) out += ' ';
    out += sentences[i];
  }
  return out;
}

}  // namespace

std::vector<LabeledText> SyntheticTrainingCorpus(size_t n_pairs,
                                                 const SyntheticOptions& options) {
  Rng rng(DeriveSeed(options.seed, 1));
  const SyntheticVocabulary& v = DefaultSyntheticVocabulary();
  std::vector<LabeledText> corpus;
  corpus.reserve(2 * n_pairs);
  for (size_t p = 0; p < n_pairs; ++p) {
    const size_t n_sentences = 2 + rng.UniformInt(3);
    std::vector<std::vector<std::string>> sentences;
    for (size_t s = 0; s < n_sentences; ++s) sentences.push_back(FillerWords(rng, options));
    // Marker slots: (sentence, position, marker index), shared by both twins.
    const size_t n_markers = 1 + rng.UniformInt(3);
    std::vector<std::tuple<size_t, size_t, size_t>> slots;
    for (size_t m = 0; m < n_markers; ++m) {
      const size_t s = rng.UniformInt(n_sentences);
      slots.emplace_back(s, rng.UniformInt(sentences[s].size() + 1),
                         rng.UniformInt(v.positive.size()));
    }
    // Weak slots: (sentence, position, word index, leaning, twin keeps word).
    struct WeakSlot {
      size_t s, at, k;
      bool lean_positive, twin_keeps;
    };
    std::vector<WeakSlot> weak_slots;
    const size_t n_weak = rng.UniformInt(2 * options.max_weak_words + 1);
    for (size_t m = 0; m < n_weak; ++m) {
      const size_t s = rng.UniformInt(n_sentences);
      weak_slots.push_back({s, rng.UniformInt(sentences[s].size() + 1),
                            rng.UniformInt(v.weak_positive.size()), rng.FairCoin(),
                            rng.UniformInt(3) < 2});
    }
    for (bool positive : {true, false}) {
      std::vector<std::vector<std::string>> doc = sentences;
      auto insert_at = [&doc](size_t s, size_t at, const std::string& word) {
        auto& words = doc[s];
        words.insert(words.begin() + static_cast<std::ptrdiff_t>(std::min(at, words.size())),
                     word);
      };
      for (const auto& [s, at, k] : slots) insert_at(s, at, Markers(positive)[k]);
      for (const WeakSlot& w : weak_slots) {
        const bool own = w.lean_positive == positive;
        insert_at(w.s, w.at, Weak(own || w.twin_keeps ? w.lean_positive : !w.lean_positive)[w.k]);
      }
      std::vector<std::string> rendered;
      for (const auto& words : doc) rendered.push_back(Render(words));
      corpus.push_back({Paragraph(rendered), positive ? kSyntheticPositive : kSyntheticNegative});
    }
  }
  return corpus;
}

FidelityTask SyntheticFidelityTask(size_t n_examples, const SyntheticOptions& options) {
  Rng rng(DeriveSeed(options.seed, 2));
  FidelityTask task;
  task.task_id = "synthetic-fidelity";
  for (size_t e = 0; e < n_examples; ++e) {
    const size_t n_sentences = 3 + rng.UniformInt(5);
    const size_t gt = rng.UniformInt(n_sentences);
    const bool positive = rng.FairCoin();
    std::vector<std::string> rendered;
    for (size_t s = 0; s < n_sentences; ++s) {
      std::vector<std::string> words = FillerWords(rng, options);
      AddWeakWords(words, rng, options);
      if (s == gt) {
        const auto& markers = Markers(positive);
        for (size_t m = 0; m < options.markers; ++m) {
          InsertWord(words, markers[rng.UniformInt(markers.size())], rng);
        }
      }
      rendered.push_back(Render(words));
    }
    task.examples.push_back({Paragraph(rendered), {gt}, std::nullopt});
  }
  return task;
}

LongTextCorpus SyntheticLongTexts(size_t n_per_class, size_t min_chars,
                                  const SyntheticOptions& options) {
  Rng rng(DeriveSeed(options.seed, 3));
  LongTextCorpus corpus;
  for (bool positive : {true, false}) {
    auto& out = positive ? corpus.positive : corpus.negative;
    for (size_t t = 0; t < n_per_class; ++t) {
      std::vector<std::vector<std::string>> paragraphs;
      size_t chars = 0;
      while (paragraphs.size() < 4 || chars < min_chars + 2) {
        std::vector<std::string> sentences;
        const size_t n_sentences = 3 + rng.UniformInt(3);
        for (size_t s = 0; s < n_sentences; ++s) {
          sentences.push_back(Render(FillerWords(rng, options)));
          chars += sentences.back().size() + 1;
        }
        paragraphs.push_back(std::move(sentences));
        chars += 1;
      }
      // Markers go into two distinct sentences of one paragraph.
      auto& marked = paragraphs[rng.UniformInt(paragraphs.size())];
      const auto& markers = Markers(positive);
      const size_t first = rng.UniformInt(marked.size());
      const size_t second = (first + 1 + rng.UniformInt(marked.size() - 1)) % marked.size();
      for (size_t s : {first, second}) {
        std::string& sentence = marked[s];
        sentence.insert(sentence.size() - 1, " " + markers[rng.UniformInt(markers.size())]);
      }
      std::string text;
      for (size_t p = 0; p < paragraphs.size(); ++p) {
        if (p > 0) text += "\n\n";
        text += Paragraph(paragraphs[p]);
      }
      out.push_back(std::move(text));
    }
  }
  return corpus;
}

}  // namespace gutek
