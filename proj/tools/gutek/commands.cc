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

#include "commands.h"

#include <charconv>
#include <filesystem>

#include "cli_util.h"
#include "gutek/diagnostics.h"
#include "gutek/error.h"
#include "gutek/eval.h"
#include "gutek/neighborhood.h"
#include "gutek/report.h"
#include "gutek/surrogate.h"
#include "gutek/synthetic.h"
#include "gutek/wasserstein.h"

namespace gutek::cli {

namespace {

std::unique_ptr<ModelHandle> Open(const ModelFlags& f) {
  if (f.model.empty()) throw Error(ErrorCode::kInvalidArgument, "--model is required");
  return OpenHandle(f.model, f.batch_size, !f.no_cache);
}

size_t ResolveClass(const ModelInfo& info, const std::string& name) {
  for (size_t i = 0; i < info.labels.size(); ++i) {
    if (info.labels[i] == name) return i;
  }
  size_t index = 0;
  const auto [end, ec] = std::from_chars(name.data(), name.data() + name.size(), index);
  if (ec == std::errc() && end == name.data() + name.size() && index < info.labels.size()) {
    return index;
  }
  throw Error(ErrorCode::kInvalidArgument, "--target-class '" + name + "' is not a label of " +
                                               info.model_id);
}

}  // namespace

void RunExplain(const ExplainFlags& f) {
  CheckBudget(f.budget);
  if (f.output != "json" && f.output != "html") {
    throw Error(ErrorCode::kInvalidArgument, "--output must be json or html");
  }
  ExplainOptions options;
  options.method = ParseMethod(f.method);
  options.aggregation = ParseAggregation(f.aggregate);
  options.budget = f.budget;
  options.seed = f.seed;
  options.kernel_width = f.kernel_width;
  if (!(f.kernel_width > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "--kernel-width must be positive");
  }
  const SegmenterRegistry registry = SegmenterRegistry::Default(LoadAbbreviations(f.abbrev_file));
  const Segmenter& segmenter = registry.Get(f.granularity);
  const std::string text = ReadInput(f.text);

  auto handle = Open(f.model);
  if (!f.target_class.empty()) options.target_class = ResolveClass(handle->info(), f.target_class);
  const Explanation e = Explain(*handle, text, segmenter, options);
  const RunInfo run{handle->info().model_id, f.budget, f.seed};
  WriteOutput(f.out, f.output == "html" ? ExplanationHtml(e, run) : ExplanationJson(e, run));
}

void RunEval(const EvalFlags& f) {
  CheckBudget(f.budget);
  const InterpreterKind kind = ParseInterpreter(f.interpreter);
  FidelityOptions options;
  options.seed = f.seed;
  options.jobs = f.jobs;
  options.abbreviations = LoadAbbreviations(f.abbrev_file);
  const FidelityTask task = LoadFidelityTask(f.task);
  auto handle = Open(f.model);
  auto interpreter = MakeInterpreter(*handle, kind, f.budget, f.kernel_width);
  const FidelityResult result = RunFidelity(task, *interpreter, options);
  WriteOutput(f.report, FidelityReportJson(result, {handle->info().model_id, f.budget, f.seed}));
}

void RunWasserstein(const WassersteinFlags& f) {
  const EmbeddingSet a = LoadEmbeddingSet(f.a);
  const EmbeddingSet b = LoadEmbeddingSet(f.b);
  WriteOutput(f.out, WassersteinJson(Wasserstein1(a, b, f.seed), a, b, f.seed));
}

void RunOod(const OodFlags& f) {
  if (f.words == 0) throw Error(ErrorCode::kInvalidArgument, "--words must be positive");
  const std::vector<std::string> texts = ReadTexts(f.texts);
  auto handle = Open(f.model);
  OodOptions options;
  options.seed = f.seed;
  options.test_fraction = f.test_fraction;
  options.forest.n_trees = f.trees;
  options.forest.jobs = f.jobs;
  const auto results =
      RunOodExperiment(*handle, texts, RemoveWordsPerturbation(f.words),
                       RemoveSentencePerturbation(LoadAbbreviations(f.abbrev_file)), options);
  WriteOutput(f.out, OodReportJson(results, f.seed));
}

void RunSegStats(const SegStatsFlags& f) {
  const SegmenterRegistry registry = SegmenterRegistry::Default(LoadAbbreviations(f.abbrev_file));
  const Segmenter& segmenter = registry.Get(f.segmenter);
  const std::vector<std::string> texts = ReadTexts(f.texts);
  WriteOutput(f.out, SegStatsJson(ComputeSegStats(texts, segmenter), f.segmenter));
}

void RunNeighborhood(const NeighborhoodFlags& f) {
  if (!(f.units > 0.0)) throw Error(ErrorCode::kInvalidArgument, "--units must be positive");
  if (f.budget < 1) throw Error(ErrorCode::kInvalidArgument, "--budget must be positive");
  WriteOutput(f.out, NeighborhoodStatsJson(ComputeNeighborhoodStats(f.units, f.budget)));
}

void RunInsertion(const InsertionFlags& f) {
  CheckBudget(f.budget);
  const InterpreterKind kind = ParseInterpreter(f.interpreter);
  const SegmenterRegistry registry = SegmenterRegistry::Default(LoadAbbreviations(f.abbrev_file));
  const Segmenter& build = registry.Get(f.build_segmenter);
  const Segmenter& explain = registry.Get(f.explain_segmenter);
  const std::vector<std::string> pos = ReadTexts(f.pos);
  const std::vector<std::string> neg = ReadTexts(f.neg);
  auto handle = Open(f.model);

  InsertionOptions options;
  options.min_chars = f.min_chars;
  options.margin = f.margin;
  options.seed = f.seed;
  options.max_cases = f.max_cases;
  const std::vector<InsertionCase> cases = BuildInsertionCases(pos, neg, *handle, build, options);
  auto interpreter = MakeInterpreter(*handle, kind, f.budget);
  const InsertionResult result = gutek::RunInsertion(cases, *interpreter, explain, f.seed, f.jobs);
  WriteOutput(f.out, InsertionReportJson(cases, result, f.build_segmenter, f.explain_segmenter,
                                         {handle->info().model_id, f.budget, f.seed}));
}

void RunTrain(const TrainFlags& f) {
  NaiveBayesOptions options;
  options.alpha = f.alpha;
  options.projection_seed = f.projection_seed;
  options.embedding_dim = f.embedding_dim;
  const auto model = NaiveBayesModel::Train(ReadLabeledTexts(f.corpus), options);
  WriteOutput(f.out, model->ToJson());
}

void RunSynth(const SynthFlags& f) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(f.out_dir, ec);
  if (ec) throw Error(ErrorCode::kIoError, "cannot create " + f.out_dir + ": " + ec.message());
  const fs::path dir(f.out_dir);

  SyntheticOptions options;
  options.seed = f.seed;
  const std::vector<LabeledText> corpus = SyntheticTrainingCorpus(f.pairs, options);
  WriteLabeledTexts(corpus, (dir / "train.jsonl").string());
  NaiveBayesModel::Train(corpus)->Save((dir / "model.json").string());
  SaveFidelityTask(SyntheticFidelityTask(f.examples, options),
                   (dir / "fidelity.jsonl").string());
  const LongTextCorpus long_texts = SyntheticLongTexts(f.long_texts, 1000, options);
  WriteTexts(long_texts.positive, (dir / "pos.jsonl").string());
  WriteTexts(long_texts.negative, (dir / "neg.jsonl").string());
}

}  // namespace gutek::cli
