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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gutek/model_handle.h"
#include "gutek/neighborhood.h"
#include "gutek/segmentation.h"

namespace gutek {

enum class Method { kGutek, kLimeWord };
enum class Aggregation { kSum, kMax };

std::string_view MethodName(Method m);
Method ParseMethod(std::string_view name);
std::string_view AggregationName(Aggregation a);
Aggregation ParseAggregation(std::string_view name);

// Condition number above which the normal equations get a ridge term.
inline constexpr double kRidgeConditionLimit = 1e12;
inline constexpr double kRidgeScale = 1e-8;

struct SurrogateFit {
  std::vector<double> weights;  // one per unit
  double intercept = 0.0;
  double r2 = 1.0;
  bool ridge_used = false;
  double condition = 0.0;  // of the centered normal matrix; +inf if singular
};

// Weighted least squares of y on the mask bits with an unpenalized intercept:
// minimizes sum_i w_i (y_i - b0 - b . m_i)^2. The intercept is eliminated by
// weighted centering; if the centered normal matrix has condition number
// above kRidgeConditionLimit, lambda = kRidgeScale * trace(M^T W M) / p is
// added to its diagonal. R^2 is weighted and defined as 1 when y is constant.
SurrogateFit FitWeightedLinear(std::span<const SegmentMask> masks,
                               std::span<const double> targets,
                               std::span<const double> sample_weights);

// Regresses records[i].output.scores[target_class] on the record masks with
// the records' kernel weights. Throws Error(kInsufficientSamples) for fewer
// than two records and Error(kBadResponse) for non-finite targets.
SurrogateFit FitSurrogate(std::span<const PerturbationRecord> records, size_t target_class);

struct Explanation {
  Document document;
  std::vector<double> unit_scores;
  double intercept = 0.0;
  size_t target_class = 0;
  std::string target_label;
  double fit_r2 = 1.0;
  size_t n_samples = 0;
  Method method = Method::kGutek;
  bool ridge_used = false;
};

struct ExplainOptions {
  Method method = Method::kGutek;
  uint64_t budget = 10;
  uint64_t seed = 0;
  double kernel_width = kDefaultKernelWidth;
  // Defaults to the argmax class of the unperturbed text.
  std::optional<size_t> target_class;
  // How word scores of kLimeWord are pooled into coarser units.
  Aggregation aggregation = Aggregation::kSum;
};

// Explains the model output on units.text() with respect to the units of
// `units`. kGutek perturbs those units directly (locality-ordered
// enumeration, unit weights); kLimeWord perturbs words (kernel-weighted
// random masks) and pools word scores into `units` unless they already are
// words. Throws Error(kEmptyDocument) for zero units and
// Error(kInvalidArgument) for budget < 2.
Explanation Explain(ModelHandle& model, const Document& units,
                    const ExplainOptions& options);

// Segments text with `segmenter`, then explains.
Explanation Explain(ModelHandle& model, std::string_view text, const Segmenter& segmenter,
                    const ExplainOptions& options);

// Pools word scores into the units of `coarse` (sum or max; a unit without
// words scores 0). Throws Error(kAlignmentError) if the word document does
// not nest inside `coarse`.
Explanation AggregateToUnits(const Explanation& word_explanation, const Document& coarse,
                             Aggregation mode);

}  // namespace gutek
