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

namespace gutek::cli {

struct ModelFlags {
  std::string model;
  size_t batch_size = 32;
  bool no_cache = false;
};

struct ExplainFlags {
  ModelFlags model;
  std::string text = "-";
  std::string granularity = "sentence";
  std::string method = "gutek";
  uint64_t budget = 10;
  uint64_t seed = 0;
  std::string output = "json";
  std::string out;
  std::string aggregate = "sum";
  double kernel_width = 0.25;
  std::string target_class;
  std::string abbrev_file;
};

struct EvalFlags {
  ModelFlags model;
  std::string task;
  std::string interpreter = "gutek";
  uint64_t budget = 10;
  uint64_t seed = 0;
  std::string report;
  size_t jobs = 1;
  double kernel_width = 0.25;
  std::string abbrev_file;
};

struct WassersteinFlags {
  std::string a;
  std::string b;
  uint64_t seed = 0;
  std::string out;
};

struct OodFlags {
  ModelFlags model;
  std::string texts;
  size_t words = 5;
  uint64_t seed = 0;
  size_t trees = 100;
  double test_fraction = 0.25;
  size_t jobs = 1;
  std::string abbrev_file;
  std::string out;
};

struct SegStatsFlags {
  std::string texts;
  std::string segmenter = "sentence";
  std::string abbrev_file;
  std::string out;
};

struct NeighborhoodFlags {
  double units = 0.0;
  uint64_t budget = 10;
  std::string out;
};

struct InsertionFlags {
  ModelFlags model;
  std::string pos;
  std::string neg;
  std::string build_segmenter = "paragraph";
  std::string explain_segmenter = "paragraph";
  std::string interpreter = "gutek";
  uint64_t budget = 10;
  uint64_t seed = 0;
  size_t min_chars = 1000;
  double margin = 0.05;
  size_t max_cases = 0;
  size_t jobs = 1;
  std::string abbrev_file;
  std::string out;
};

struct TrainFlags {
  std::string corpus;
  std::string out;
  double alpha = 1.0;
  uint64_t projection_seed = 20240917;
  size_t embedding_dim = 64;
};

struct SynthFlags {
  std::string out_dir;
  uint64_t seed = 7;
  size_t pairs = 200;
  size_t examples = 200;
  size_t long_texts = 40;
};

void RunExplain(const ExplainFlags& f);
void RunEval(const EvalFlags& f);
void RunWasserstein(const WassersteinFlags& f);
void RunOod(const OodFlags& f);
void RunSegStats(const SegStatsFlags& f);
void RunNeighborhood(const NeighborhoodFlags& f);
void RunInsertion(const InsertionFlags& f);
void RunTrain(const TrainFlags& f);
void RunSynth(const SynthFlags& f);

}  // namespace gutek::cli
