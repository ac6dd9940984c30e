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
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gutek/metrics.h"
#include "gutek/model_handle.h"
#include "gutek/segmentation.h"
#include "gutek/surrogate.h"

namespace gutek {

struct FidelityExample {
  std::string context;
  std::vector<size_t> gt_sentences;
  std::optional<std::string> question;
};

struct FidelityTask {
  std::string task_id;
  std::vector<FidelityExample> examples;
};

// JSONL, one {"context": str, "gt_sentences": [int], "question": str?} per
// line. The task id defaults to the file name.
FidelityTask LoadFidelityTask(const std::string& path);
void SaveFidelityTask(const FidelityTask& task, const std::string& path);

// Produces unit scores for a segmented text.
class Interpreter {
 public:
  virtual ~Interpreter() = default;
  virtual std::string name() const = 0;
  virtual Explanation Explain(const Document& units, std::optional<size_t> target_class,
                              uint64_t seed) const = 0;
};

enum class InterpreterKind { kGutek, kLimeWordSum, kLimeWordMax };

std::string_view InterpreterName(InterpreterKind kind);
InterpreterKind ParseInterpreter(std::string_view name);

// Interpreter backed by Explain(); the handle must outlive it.
std::unique_ptr<Interpreter> MakeInterpreter(ModelHandle& model, InterpreterKind kind,
                                             uint64_t budget,
                                             double kernel_width = kDefaultKernelWidth);

struct FidelityOptions {
  uint64_t seed = 0;
  size_t jobs = 1;
  std::shared_ptr<const AbbreviationSet> abbreviations = AbbreviationSet::Bundled();
};

struct FidelityResult {
  std::string task_id;
  std::string interpreter;
  MetricReport report;
  std::vector<EvalRecord> records;
  std::vector<size_t> example_index;  // task position of each record
  size_t n_skipped = 0;
};

// Explains every context at sentence granularity and scores it against the
// ground-truth sentences. Examples whose context has no sentences or whose
// indices fall outside the segmentation are skipped and counted. Per-example
// seeds derive from (seed, example index), so results do not depend on jobs.
FidelityResult RunFidelity(const FidelityTask& task, const Interpreter& interpreter,
                           const FidelityOptions& options = {});

struct InsertionCase {
  std::string source_text;
  std::string host_text;
  std::string modified_text;
  size_t source_class = 0;
  size_t host_class = 0;
  // Half-open unit range of the inserted segment in the build segmentation
  // of modified_text, and the same span as word-token indices.
  std::pair<size_t, size_t> inserted_units;
  std::pair<size_t, size_t> inserted_words;
  double source_prob_before = 0.0;
  double source_prob_after = 0.0;
  double class_flip_margin = 0.0;
};

struct InsertionOptions {
  size_t min_chars = 1000;
  double margin = 0.05;
  uint64_t seed = 0;
  size_t max_cases = 0;  // 0 keeps every qualifying case
};

// Pairs texts of opposite predicted class, inserts a random segment of the
// source at a random segment boundary of the host, and keeps the case if the
// source class probability on the host rises by at least options.margin.
// Texts shorter than options.min_chars (in scalar values) are never used.
// Throws Error(kEmptyCaseSet) when nothing qualifies.
std::vector<InsertionCase> BuildInsertionCases(std::span<const std::string> pos_texts,
                                               std::span<const std::string> neg_texts,
                                               ModelHandle& model,
                                               const Segmenter& build_segmenter,
                                               const InsertionOptions& options = {});

struct InsertionResult {
  double mean_iou = 0.0;
  double std_iou = 0.0;
  std::vector<double> per_case;
};

// Explains each modified text against the host's class. Units with negative
// attribution are candidates; the detected IoU of a case is the largest
// word-index IoU between a candidate and the inserted span (0 without
// candidates).
InsertionResult RunInsertion(std::span<const InsertionCase> cases,
                             const Interpreter& interpreter,
                             const Segmenter& explain_segmenter, uint64_t seed = 0,
                             size_t jobs = 1);

// Word-index IoU of two half-open ranges.
double SpanIou(std::pair<size_t, size_t> a, std::pair<size_t, size_t> b);

}  // namespace gutek
