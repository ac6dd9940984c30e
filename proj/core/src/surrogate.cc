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

#include "gutek/surrogate.h"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>

#include "gutek/error.h"

namespace gutek {

std::string_view MethodName(Method m) {
  return m == Method::kGutek ? "gutek" : "lime-word";
}

Method ParseMethod(std::string_view name) {
  if (name == "gutek") return Method::kGutek;
  if (name == "lime-word") return Method::kLimeWord;
  throw Error(ErrorCode::kInvalidArgument, "unknown method '" + std::string(name) + "'");
}

std::string_view AggregationName(Aggregation a) {
  return a == Aggregation::kSum ? "sum" : "max";
}

Aggregation ParseAggregation(std::string_view name) {
  if (name == "sum") return Aggregation::kSum;
  if (name == "max") return Aggregation::kMax;
  throw Error(ErrorCode::kInvalidArgument, "unknown aggregation '" + std::string(name) + "'");
}

SurrogateFit FitWeightedLinear(std::span<const SegmentMask> masks,
                               std::span<const double> targets,
                               std::span<const double> sample_weights) {
  const size_t n = masks.size();
  if (n < 2) {
    throw Error(ErrorCode::kInsufficientSamples,
                "surrogate needs at least 2 samples, got " + std::to_string(n));
  }
  if (targets.size() != n || sample_weights.size() != n) {
    throw Error(ErrorCode::kInvalidArgument, "masks, targets and weights differ in length");
  }
  const size_t p = masks[0].size();
  for (size_t i = 0; i < n; ++i) {
    if (masks[i].size() != p) {
      throw Error(ErrorCode::kMaskMismatch, "masks differ in length");
    }
    if (!std::isfinite(targets[i])) {
      throw Error(ErrorCode::kBadResponse, "non-finite regression target");
    }
    if (!(sample_weights[i] > 0.0) || !std::isfinite(sample_weights[i])) {
      throw Error(ErrorCode::kInvalidArgument, "sample weights must be positive and finite");
    }
  }

  Eigen::MatrixXd x(n, p);
  Eigen::VectorXd y(n);
  Eigen::VectorXd w(n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < p; ++j) x(i, j) = masks[i].bits[j];
    y(i) = targets[i];
    w(i) = sample_weights[i];
  }
  const double w_sum = w.sum();
  const Eigen::RowVectorXd x_mean = (w.transpose() * x) / w_sum;
  const double y_mean = w.dot(y) / w_sum;
  const Eigen::MatrixXd xc = x.rowwise() - x_mean;
  const Eigen::VectorXd yc = y.array() - y_mean;

  SurrogateFit fit;
  Eigen::VectorXd beta = Eigen::VectorXd::Zero(p);
  if (p > 0) {
    const Eigen::MatrixXd normal = xc.transpose() * w.asDiagonal() * xc;
    const Eigen::VectorXd rhs = xc.transpose() * w.asDiagonal() * yc;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(normal);
    const Eigen::VectorXd& evals = eig.eigenvalues();
    const double lo = evals.minCoeff();
    const double hi = evals.maxCoeff();
    fit.condition = (lo > 0.0) ? hi / lo : std::numeric_limits<double>::infinity();

    double lambda = 0.0;
    if (!(fit.condition <= kRidgeConditionLimit)) {
      const double trace = (x.array().square().colwise() * w.array()).sum();
      lambda = trace > 0.0 ? kRidgeScale * trace / static_cast<double>(p) : kRidgeScale;
      fit.ridge_used = true;
    }
    // Solve in the eigenbasis; with lambda > 0 every pivot is positive.
    const Eigen::VectorXd projected = eig.eigenvectors().transpose() * rhs;
    Eigen::VectorXd scaled(p);
    for (size_t k = 0; k < p; ++k) {
      const double d = (lambda > 0.0 ? std::max(evals(k), 0.0) : evals(k)) + lambda;
      scaled(k) = projected(k) / d;
    }
    beta = eig.eigenvectors() * scaled;
  }

  fit.weights.assign(beta.data(), beta.data() + p);
  fit.intercept = y_mean - x_mean.dot(beta);

  const Eigen::VectorXd resid =
      y - x * beta - Eigen::VectorXd::Constant(static_cast<Eigen::Index>(n), fit.intercept);
  const double ss_res = (w.array() * resid.array().square()).sum();
  const double ss_tot = (w.array() * yc.array().square()).sum();
  fit.r2 = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;
  return fit;
}

SurrogateFit FitSurrogate(std::span<const PerturbationRecord> records, size_t target_class) {
  if (records.size() < 2) {
    throw Error(ErrorCode::kInsufficientSamples,
                "surrogate needs at least 2 records, got " + std::to_string(records.size()));
  }
  std::vector<SegmentMask> masks;
  std::vector<double> targets;
  std::vector<double> weights;
  masks.reserve(records.size());
  targets.reserve(records.size());
  weights.reserve(records.size());
  for (const PerturbationRecord& r : records) {
    if (target_class >= r.output.scores.size()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "target class " + std::to_string(target_class) + " out of range");
    }
    masks.push_back(r.mask);
    targets.push_back(r.output.scores[target_class]);
    weights.push_back(r.kernel_weight);
  }
  return FitWeightedLinear(masks, targets, weights);
}

namespace {

std::vector<PerturbationRecord> Query(ModelHandle& model, const Document& doc,
                                      std::vector<WeightedMask> masks) {
  std::vector<std::string> texts;
  texts.reserve(masks.size());
  for (const WeightedMask& m : masks) texts.push_back(Reconstruct(doc, m.mask));
  std::vector<ModelOutput> outputs = model.PredictAll(texts);
  std::vector<PerturbationRecord> records;
  records.reserve(masks.size());
  for (size_t i = 0; i < masks.size(); ++i) {
    records.push_back(PerturbationRecord{std::move(masks[i].mask), std::move(texts[i]),
                                         std::move(outputs[i]), masks[i].kernel_weight});
  }
  return records;
}

}  // namespace

Explanation Explain(ModelHandle& model, const Document& units,
                    const ExplainOptions& options) {
  if (units.empty()) {
    throw Error(ErrorCode::kEmptyDocument, "text has no units to explain");
  }
  if (options.budget < 2) {
    throw Error(ErrorCode::kInvalidArgument, "budget must be at least 2");
  }

  const bool words = options.method == Method::kLimeWord;
  const Document word_doc = words && units.granularity() != SegmentKind::kWord
                                ? SplitWords(units.text())
                                : units;
  const Document& perturbed = words ? word_doc : units;
  if (perturbed.empty()) {
    throw Error(ErrorCode::kEmptyDocument, "text has no word tokens to perturb");
  }

  std::vector<WeightedMask> masks;
  if (words) {
    masks = SampleWordMasks(perturbed.size(), options.budget, options.seed,
                            options.kernel_width);
  } else {
    for (SegmentMask& m : EnumerateLocalMasks(perturbed.size(), options.budget)) {
      masks.push_back({std::move(m), 1.0});
    }
  }
  const std::vector<PerturbationRecord> records = Query(model, perturbed, std::move(masks));

  const size_t target = options.target_class.value_or(records.front().output.Argmax());
  if (target >= model.info().labels.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "target class " + std::to_string(target) + " out of range");
  }
  const SurrogateFit fit = FitSurrogate(records, target);

  Explanation e{perturbed, fit.weights, fit.intercept, target,
                model.info().labels[target], fit.r2, records.size(), options.method,
                fit.ridge_used};
  if (words && units.granularity() != SegmentKind::kWord) {
    return AggregateToUnits(e, units, options.aggregation);
  }
  return e;
}

Explanation Explain(ModelHandle& model, std::string_view text, const Segmenter& segmenter,
                    const ExplainOptions& options) {
  return Explain(model, segmenter.Split(text), options);
}

Explanation AggregateToUnits(const Explanation& word_explanation, const Document& coarse,
                             Aggregation mode) {
  const Document& words = word_explanation.document;
  if (word_explanation.unit_scores.size() != words.size()) {
    throw Error(ErrorCode::kAlignmentError, "word scores do not match the word document");
  }
  const auto members = AlignWords(words, coarse);
  std::vector<double> pooled(coarse.size(), 0.0);
  for (size_t u = 0; u < coarse.size(); ++u) {
    if (members[u].empty()) continue;
    double acc = mode == Aggregation::kSum ? 0.0 : -std::numeric_limits<double>::infinity();
    for (size_t w : members[u]) {
      const double s = word_explanation.unit_scores[w];
      acc = mode == Aggregation::kSum ? acc + s : std::max(acc, s);
    }
    pooled[u] = acc;
  }
  Explanation out = word_explanation;
  out.document = coarse;
  out.unit_scores = std::move(pooled);
  return out;
}

}  // namespace gutek
