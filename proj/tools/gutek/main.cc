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

// gutek: sentence-level explanations for black-box text classifiers.
//
// Exit codes: 0 success, 1 runtime failure, 2 bad flags, 3 model failure.
// Errors are reported on stderr as {"error": {"code": ..., "message": ...}}.

#include <iostream>

#include "CLI11.hpp"
#include "commands.h"
#include "gutek/error.h"
#include "json.hpp"

namespace {

constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;
constexpr int kExitModel = 3;

int ReportError(std::string_view code, const std::string& message, int exit_code) {
  nlohmann::json j{{"error", {{"code", code}, {"message", message}}}};
  std::cerr << j.dump() << std::endl;
  return exit_code;
}

void AddModelFlags(CLI::App* app, gutek::cli::ModelFlags& f) {
  app->add_option("--model", f.model, "builtin:PATH or subprocess:COMMAND")->required();
  app->add_option("--batch-size", f.batch_size, "Texts per model request")
      ->capture_default_str();
  app->add_flag("--no-cache", f.no_cache, "Disable the prediction cache");
}

}  // namespace

int main(int argc, char** argv) {
  using namespace gutek::cli;
  CLI::App app{"Sentence-level explanations for black-box text classifiers", "gutek"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "gutek 0.1.0");

  ExplainFlags explain;
  auto* c_explain = app.add_subcommand("explain", "Explain one prediction");
  AddModelFlags(c_explain, explain.model);
  c_explain->add_option("--text", explain.text, "Input file, or - for stdin")
      ->capture_default_str();
  c_explain->add_option("--granularity", explain.granularity, "word, sentence or paragraph")
      ->capture_default_str();
  c_explain->add_option("--method", explain.method, "gutek or lime-word")->capture_default_str();
  c_explain->add_option("--budget", explain.budget, "Model queries")->capture_default_str();
  c_explain->add_option("--seed", explain.seed)->capture_default_str();
  c_explain->add_option("--output", explain.output, "json or html")->capture_default_str();
  c_explain->add_option("--out", explain.out, "Output file (default stdout)");
  c_explain->add_option("--aggregate", explain.aggregate,
                        "sum or max; pools lime-word scores into coarser units")
      ->capture_default_str();
  c_explain->add_option("--kernel-width", explain.kernel_width)->capture_default_str();
  c_explain->add_option("--target-class", explain.target_class,
                        "Label or index (default: predicted class)");
  c_explain->add_option("--abbrev-file", explain.abbrev_file, "Abbreviation list");
  c_explain->callback([&] { RunExplain(explain); });

  EvalFlags eval;
  auto* c_eval = app.add_subcommand("eval", "Fidelity evaluation against ground-truth sentences");
  AddModelFlags(c_eval, eval.model);
  c_eval->add_option("--task", eval.task, "Fidelity task JSONL")->required();
  c_eval->add_option("--interpreter", eval.interpreter, "gutek, lime-word-sum or lime-word-max")
      ->capture_default_str();
  c_eval->add_option("--budget", eval.budget)->capture_default_str();
  c_eval->add_option("--seed", eval.seed)->capture_default_str();
  c_eval->add_option("--report", eval.report, "Report file (default stdout)");
  c_eval->add_option("--jobs", eval.jobs, "Parallel examples")->capture_default_str();
  c_eval->add_option("--kernel-width", eval.kernel_width)->capture_default_str();
  c_eval->add_option("--abbrev-file", eval.abbrev_file);
  c_eval->callback([&] { RunEval(eval); });

  auto* c_diagnose = app.add_subcommand("diagnose", "Distribution-shift and complexity diagnostics");
  c_diagnose->require_subcommand(1);

  WassersteinFlags w1;
  auto* c_w1 = c_diagnose->add_subcommand("wasserstein", "Empirical W1 between embedding sets");
  c_w1->add_option("--a", w1.a, "Embedding JSONL")->required();
  c_w1->add_option("--b", w1.b, "Embedding JSONL")->required();
  c_w1->add_option("--seed", w1.seed)->capture_default_str();
  c_w1->add_option("--out", w1.out);
  c_w1->callback([&] { RunWasserstein(w1); });

  OodFlags ood;
  auto* c_ood = c_diagnose->add_subcommand("ood", "Original-vs-altered embedding classifier");
  AddModelFlags(c_ood, ood.model);
  c_ood->add_option("--texts", ood.texts, "Texts JSONL")->required();
  c_ood->add_option("--words", ood.words, "Words removed by the word scheme")
      ->capture_default_str();
  c_ood->add_option("--seed", ood.seed)->capture_default_str();
  c_ood->add_option("--trees", ood.trees)->capture_default_str();
  c_ood->add_option("--test-fraction", ood.test_fraction)->capture_default_str();
  c_ood->add_option("--jobs", ood.jobs, "Tree-fitting threads")->capture_default_str();
  c_ood->add_option("--abbrev-file", ood.abbrev_file);
  c_ood->add_option("--out", ood.out);
  c_ood->callback([&] { RunOod(ood); });

  SegStatsFlags segstats;
  auto* c_seg = c_diagnose->add_subcommand("segstats", "Segment count and length statistics");
  c_seg->add_option("--texts", segstats.texts, "Texts JSONL")->required();
  c_seg->add_option("--segmenter", segstats.segmenter)->capture_default_str();
  c_seg->add_option("--abbrev-file", segstats.abbrev_file);
  c_seg->add_option("--out", segstats.out);
  c_seg->callback([&] { RunSegStats(segstats); });

  NeighborhoodFlags hood;
  auto* c_hood = c_diagnose->add_subcommand("neighborhood", "Neighborhood size arithmetic");
  c_hood->add_option("--units", hood.units, "Unit count (fractional averages allowed)")
      ->required();
  c_hood->add_option("--budget", hood.budget)->capture_default_str();
  c_hood->add_option("--out", hood.out);
  c_hood->callback([&] { RunNeighborhood(hood); });

  InsertionFlags ins;
  auto* c_ins = app.add_subcommand("insertion", "Segment-insertion localization experiment");
  AddModelFlags(c_ins, ins.model);
  c_ins->add_option("--pos", ins.pos, "Texts JSONL")->required();
  c_ins->add_option("--neg", ins.neg, "Texts JSONL")->required();
  c_ins->add_option("--build-segmenter", ins.build_segmenter)->capture_default_str();
  c_ins->add_option("--explain-segmenter", ins.explain_segmenter)->capture_default_str();
  c_ins->add_option("--interpreter", ins.interpreter)->capture_default_str();
  c_ins->add_option("--budget", ins.budget)->capture_default_str();
  c_ins->add_option("--seed", ins.seed)->capture_default_str();
  c_ins->add_option("--min-chars", ins.min_chars)->capture_default_str();
  c_ins->add_option("--margin", ins.margin)->capture_default_str();
  c_ins->add_option("--max-cases", ins.max_cases, "0 keeps all")->capture_default_str();
  c_ins->add_option("--jobs", ins.jobs)->capture_default_str();
  c_ins->add_option("--abbrev-file", ins.abbrev_file);
  c_ins->add_option("--out", ins.out);
  c_ins->callback([&] { RunInsertion(ins); });

  TrainFlags train;
  auto* c_train = app.add_subcommand("train", "Train the builtin Naive Bayes classifier");
  c_train->add_option("--corpus", train.corpus, "JSONL of {text, label}")->required();
  c_train->add_option("--out", train.out, "Model JSON")->required();
  c_train->add_option("--alpha", train.alpha)->capture_default_str();
  c_train->add_option("--projection-seed", train.projection_seed)->capture_default_str();
  c_train->add_option("--embedding-dim", train.embedding_dim)->capture_default_str();
  c_train->callback([&] { RunTrain(train); });

  SynthFlags synth;
  auto* c_synth = app.add_subcommand("synth", "Write the synthetic corpora and model");
  c_synth->add_option("--out-dir", synth.out_dir)->required();
  c_synth->add_option("--seed", synth.seed)->capture_default_str();
  c_synth->add_option("--pairs", synth.pairs, "Training pairs")->capture_default_str();
  c_synth->add_option("--examples", synth.examples, "Fidelity examples")->capture_default_str();
  c_synth->add_option("--long-texts", synth.long_texts, "Long texts per class")
      ->capture_default_str();
  c_synth->callback([&] { RunSynth(synth); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return ReportError("InvalidArgument", e.what(), kExitUsage);
  } catch (const gutek::Error& e) {
    const gutek::ErrorCode code = e.code();
    int exit_code = kExitRuntime;
    if (code == gutek::ErrorCode::kInvalidArgument ||
        code == gutek::ErrorCode::kUnknownSegmenter) {
      exit_code = kExitUsage;
    } else if (gutek::IsModelError(code)) {
      exit_code = kExitModel;
    }
    return ReportError(gutek::ErrorCodeName(code), e.what(), exit_code);
  } catch (const std::exception& e) {
    return ReportError("Internal", e.what(), kExitRuntime);
  }
  return 0;
}
