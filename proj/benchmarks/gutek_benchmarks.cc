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

#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "gutek/model_handle.h"
#include "gutek/naive_bayes.h"
#include "gutek/neighborhood.h"
#include "gutek/random.h"
#include "gutek/segmentation.h"
#include "gutek/surrogate.h"
#include "gutek/synthetic.h"
#include "gutek/wasserstein.h"

namespace gutek {
namespace {

void BM_EnumerateLocalMasks(benchmark::State& state) {
  const size_t n = static_cast<size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(EnumerateLocalMasks(n, 1000));
  }
}
BENCHMARK(BM_EnumerateLocalMasks)->Arg(10)->Arg(100)->Arg(1000);

void BM_FitWeightedLinear(benchmark::State& state) {
  const size_t n = static_cast<size_t>(state.range(0));
  const auto masks = SampleWordMasks(n, 4 * n, 1);
  std::vector<SegmentMask> m;
  std::vector<double> y, w;
  Rng rng(2);
  for (const auto& wm : masks) {
    m.push_back(wm.mask);
    w.push_back(wm.kernel_weight);
    y.push_back(rng.UniformDouble());
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(FitWeightedLinear(m, y, w));
  }
}
BENCHMARK(BM_FitWeightedLinear)->Arg(8)->Arg(64)->Arg(256);

std::string LongText() {
  return SyntheticLongTexts(1).positive.front();
}

void BM_SplitSentences(benchmark::State& state) {
  const std::string text = LongText();
  for (auto _ : state) benchmark::DoNotOptimize(SplitSentences(text));
  state.SetBytesProcessed(state.iterations() * static_cast<int64_t>(text.size()));
}
BENCHMARK(BM_SplitSentences);

void BM_SplitWords(benchmark::State& state) {
  const std::string text = LongText();
  for (auto _ : state) benchmark::DoNotOptimize(SplitWords(text));
  state.SetBytesProcessed(state.iterations() * static_cast<int64_t>(text.size()));
}
BENCHMARK(BM_SplitWords);

void BM_Wasserstein1(benchmark::State& state) {
  const size_t n = static_cast<size_t>(state.range(0));
  Rng rng(3);
  EmbeddingSet a, b;
  for (size_t i = 0; i < n; ++i) {
    std::vector<double> u(16), v(16);
    for (double& x : u) x = rng.Normal();
    for (double& x : v) x = rng.Normal() + 0.5;
    a.vectors.push_back(u);
    b.vectors.push_back(v);
  }
  for (auto _ : state) benchmark::DoNotOptimize(Wasserstein1(a, b));
}
BENCHMARK(BM_Wasserstein1)->Arg(16)->Arg(128)->Arg(512);

void BM_ExplainGutek(benchmark::State& state) {
  ModelHandle handle(NaiveBayesModel::Train(SyntheticTrainingCorpus(100)),
                     {.cache = false});
  const std::string text = SyntheticFidelityTask(1).examples.front().context;
  const Document doc = SplitSentences(text);
  for (auto _ : state) {
    benchmark::DoNotOptimize(Explain(handle, doc, {.budget = 10}));
  }
}
BENCHMARK(BM_ExplainGutek);

}  // namespace
}  // namespace gutek

BENCHMARK_MAIN();
