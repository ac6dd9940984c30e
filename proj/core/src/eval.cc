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

#include "gutek/eval.h"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>

#include "gutek/diagnostics.h"
#include "gutek/error.h"
#include "gutek/random.h"
#include "gutek/unicode.h"
#include "json.hpp"
#include "parallel.h"

namespace gutek {

using nlohmann::json;

FidelityTask LoadFidelityTask(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot read task file " + path);
  FidelityTask task;
  task.task_id = std::filesystem::path(path).stem().string();
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const json j = json::parse(line, nullptr, false);
    const std::string where = path + ":" + std::to_string(line_no) + ": ";
    if (j.is_discarded() || !j.is_object()) {
      throw Error(ErrorCode::kParseError, where + "not a JSON object");
    }
    FidelityExample ex;
    try {
      ex.context = j.at("context").get<std::string>();
      ex.gt_sentences = j.at("gt_sentences").get<std::vector<size_t>>();
      if (j.contains("question") && !j["question"].is_null()) {
        ex.question = j["question"].get<std::string>();
      }
    } catch (const json::exception& e) {
      throw Error(ErrorCode::kParseError, where + e.what());
    }
    task.examples.push_back(std::move(ex));
  }
  return task;
}

void SaveFidelityTask(const FidelityTask& task, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write task file " + path);
  for (const FidelityExample& ex : task.examples) {
    json j{{"context", ex.context}, {"gt_sentences", ex.gt_sentences}};
    if (ex.question) j["question"] = *ex.question;
    out << j.dump() << '\n';
  }
}

std::string_view InterpreterName(InterpreterKind kind) {
  switch (kind) {
    case InterpreterKind::kGutek: return "gutek";
    case InterpreterKind::kLimeWordSum: return "lime-word-sum";
    case InterpreterKind::kLimeWordMax: return "lime-word-max";
  }
  return "gutek";
}

InterpreterKind ParseInterpreter(std::string_view name) {
  if (name == "gutek") return InterpreterKind::kGutek;
  if (name == "lime-word-sum" || name == "lime-word") return InterpreterKind::kLimeWordSum;
  if (name == "lime-word-max") return InterpreterKind::kLimeWordMax;
  throw Error(ErrorCode::kInvalidArgument, "unknown interpreter '" + std::string(name) + "'");
}

namespace {

class ExplainInterpreter final : public Interpreter {
 public:
  ExplainInterpreter(ModelHandle& model, InterpreterKind kind, uint64_t budget,
                     double kernel_width)
      : model_(model), kind_(kind) {
    options_.method = kind == InterpreterKind::kGutek ? Method::kGutek : Method::kLimeWord;
    options_.aggregation =
        kind == InterpreterKind::kLimeWordMax ? Aggregation::kMax : Aggregation::kSum;
    options_.budget = budget;
    options_.kernel_width = kernel_width;
  }

  std::string name() const override { return std::string(InterpreterName(kind_)); }

  Explanation Explain(const Document& units, std::optional<size_t> target_class,
                      uint64_t seed) const override {
    ExplainOptions o = options_;
    o.seed = seed;
    o.target_class = target_class;
    return gutek::Explain(model_, units, o);
  }

 private:
  ModelHandle& model_;
  InterpreterKind kind_;
  ExplainOptions options_;
};

}  // namespace

std::unique_ptr<Interpreter> MakeInterpreter(ModelHandle& model, InterpreterKind kind,
                                             uint64_t budget, double kernel_width) {
  if (budget < 2) throw Error(ErrorCode::kInvalidArgument, "budget must be at least 2");
  return std::make_unique<ExplainInterpreter>(model, kind, budget, kernel_width);
}

FidelityResult RunFidelity(const FidelityTask& task, const Interpreter& interpreter,
                           const FidelityOptions& options) {
  const size_t n = task.examples.size();
  std::vector<std::optional<EvalRecord>> slots(n);
  internal::ParallelFor(n, options.jobs, [&](size_t i) {
    const FidelityExample& ex = task.examples[i];
    const Document sentences = SplitSentences(ex.context, *options.abbreviations);
    if (sentences.empty() || ex.gt_sentences.empty()) return;
    for (size_t g : ex.gt_sentences) {
      if (g >= sentences.size()) return;
    }
    const Explanation e =
        interpreter.Explain(sentences, std::nullopt, DeriveSeed(options.seed, i));
    slots[i] = Evaluate(e.unit_scores, ex.gt_sentences);
  });

  FidelityResult result;
  result.task_id = task.task_id;
  result.interpreter = interpreter.name();
  for (size_t i = 0; i < n; ++i) {
    if (!slots[i]) {
      ++result.n_skipped;
      continue;
    }
    result.records.push_back(std::move(*slots[i]));
    result.example_index.push_back(i);
  }
  result.report = Aggregate(result.records);
  return result;
}

double SpanIou(std::pair<size_t, size_t> a, std::pair<size_t, size_t> b) {
  const size_t lo = std::max(a.first, b.first);
  const size_t hi = std::min(a.second, b.second);
  const size_t inter = hi > lo ? hi - lo : 0;
  const size_t uni = (a.second - a.first) + (b.second - b.first) - inter;
  return uni == 0 ? 0.0 : static_cast<double>(inter) / static_cast<double>(uni);
}

namespace {

// Word-token index range covering [char_start, char_end); nullopt if a token
// straddles either boundary.
std::optional<std::pair<size_t, size_t>> WordRange(const Document& words, size_t char_start,
                                                   size_t char_end) {
  size_t first = words.size();
  size_t last = 0;
  for (const Segment& w : words.segments()) {
    const bool inside = w.char_start >= char_start && w.char_end <= char_end;
    const bool outside = w.char_end <= char_start || w.char_start >= char_end;
    if (!inside && !outside) return std::nullopt;
    if (inside) {
      first = std::min(first, w.index);
      last = std::max(last, w.index + 1);
    }
  }
  if (first >= last) return std::nullopt;
  return std::make_pair(first, last);
}

std::string Separator(const Document& doc, size_t boundary) {
  // Reuse the host's own spacing so the insert matches its segmentation.
  std::string_view gap;
  if (doc.size() >= 2) {
    gap = doc.Gap(std::clamp<size_t>(boundary, 1, doc.size() - 1));
  }
  return gap.empty() ? std::string(" ") : std::string(gap);
}

}  // namespace

std::vector<InsertionCase> BuildInsertionCases(std::span<const std::string> pos_texts,
                                               std::span<const std::string> neg_texts,
                                               ModelHandle& model,
                                               const Segmenter& build_segmenter,
                                               const InsertionOptions& options) {
  std::vector<std::string> pool;
  for (auto texts : {pos_texts, neg_texts}) {
    for (const std::string& t : texts) {
      if (unicode::Length(t) >= options.min_chars) pool.push_back(t);
    }
  }
  if (pool.empty()) {
    throw Error(ErrorCode::kEmptyCaseSet, "no text reaches the minimum length");
  }
  const std::vector<ModelOutput> outputs = model.PredictAll(pool);
  std::map<size_t, std::vector<size_t>> by_class;
  for (size_t i = 0; i < pool.size(); ++i) by_class[outputs[i].Argmax()].push_back(i);

  Rng rng(options.seed);
  for (auto& [_, members] : by_class) rng.Shuffle(std::span<size_t>(members));

  // Ordered (source, host) pairs across every pair of distinct classes.
  std::vector<std::pair<size_t, size_t>> pairs;
  for (auto a = by_class.begin(); a != by_class.end(); ++a) {
    for (auto b = std::next(a); b != by_class.end(); ++b) {
      const size_t m = std::min(a->second.size(), b->second.size());
      for (size_t i = 0; i < m; ++i) {
        pairs.emplace_back(a->second[i], b->second[i]);
        pairs.emplace_back(b->second[i], a->second[i]);
      }
    }
  }

  struct Candidate {
    InsertionCase c;
    size_t host;
  };
  std::vector<Candidate> candidates;
  for (const auto& [src, host] : pairs) {
    const Document src_doc = build_segmenter.Split(pool[src]);
    const Document host_doc = build_segmenter.Split(pool[host]);
    if (src_doc.empty() || host_doc.empty()) continue;
    const size_t seg = rng.UniformInt(src_doc.size());
    const size_t boundary = rng.UniformInt(host_doc.size() + 1);
    const std::string insert(src_doc.SegmentText(seg));
    const std::string sep = Separator(host_doc, boundary);
    const std::string& h = host_doc.text();

    std::string modified;
    size_t insert_byte;
    if (boundary == 0) {
      const size_t head = host_doc.segment(0).byte_start;
      modified = h.substr(0, head);
      insert_byte = modified.size();
      modified += insert + sep + h.substr(head);
    } else {
      const size_t cut = host_doc.segment(boundary - 1).byte_end;
      modified = h.substr(0, cut) + sep;
      insert_byte = modified.size();
      modified += insert + h.substr(cut);
    }
    const size_t char_start = unicode::Length(std::string_view(modified).substr(0, insert_byte));
    const size_t char_end = char_start + unicode::Length(insert);

    const Document units = build_segmenter.Split(modified);
    size_t u_first = units.size();
    size_t u_last = 0;
    bool aligned = true;
    for (const Segment& s : units.segments()) {
      const bool inside = s.char_start >= char_start && s.char_end <= char_end;
      const bool outside = s.char_end <= char_start || s.char_start >= char_end;
      if (!inside && !outside) aligned = false;
      if (inside) {
        u_first = std::min(u_first, s.index);
        u_last = std::max(u_last, s.index + 1);
      }
    }
    const auto words = WordRange(SplitWords(modified), char_start, char_end);
    if (!aligned || u_first >= u_last || !words) continue;

    InsertionCase c;
    c.source_text = pool[src];
    c.host_text = pool[host];
    c.modified_text = std::move(modified);
    c.source_class = outputs[src].Argmax();
    c.host_class = outputs[host].Argmax();
    c.inserted_units = {u_first, u_last};
    c.inserted_words = *words;
    c.source_prob_before = outputs[host].scores[c.source_class];
    c.class_flip_margin = options.margin;
    candidates.push_back({std::move(c), host});
  }

  std::vector<InsertionCase> cases;
  if (!candidates.empty()) {
    std::vector<std::string> modified_texts;
    for (const Candidate& cand : candidates) modified_texts.push_back(cand.c.modified_text);
    const std::vector<ModelOutput> after = model.PredictAll(modified_texts);
    for (size_t i = 0; i < candidates.size(); ++i) {
      InsertionCase& c = candidates[i].c;
      c.source_prob_after = after[i].scores[c.source_class];
      if (c.source_prob_after - c.source_prob_before >= options.margin) {
        cases.push_back(std::move(c));
        if (options.max_cases > 0 && cases.size() >= options.max_cases) break;
      }
    }
  }
  if (cases.empty()) {
    throw Error(ErrorCode::kEmptyCaseSet,
                "no insertion raised the source class probability by the margin");
  }
  return cases;
}

InsertionResult RunInsertion(std::span<const InsertionCase> cases,
                             const Interpreter& interpreter,
                             const Segmenter& explain_segmenter, uint64_t seed, size_t jobs) {
  InsertionResult result;
  result.per_case.assign(cases.size(), 0.0);
  internal::ParallelFor(cases.size(), jobs, [&](size_t i) {
    const InsertionCase& c = cases[i];
    const Document units = explain_segmenter.Split(c.modified_text);
    if (units.empty()) return;
    const Explanation e = interpreter.Explain(units, c.host_class, DeriveSeed(seed, i));
    const Document words = SplitWords(c.modified_text);
    const auto members = AlignWords(words, units);
    double best = 0.0;
    for (size_t u = 0; u < units.size(); ++u) {
      if (!(e.unit_scores[u] < 0.0) || members[u].empty()) continue;
      const std::pair<size_t, size_t> span{members[u].front(), members[u].back() + 1};
      best = std::max(best, SpanIou(span, c.inserted_words));
    }
    result.per_case[i] = best;
  });
  const MeanStd stats = ComputeMeanStd(result.per_case);
  result.mean_iou = stats.mean;
  result.std_iou = stats.std;
  return result;
}

}  // namespace gutek
