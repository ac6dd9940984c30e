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
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "gutek/model.h"

namespace gutek {

struct LabeledText {
  std::string text;
  std::string label;
};

struct NaiveBayesOptions {
  double alpha = 1.0;  // additive smoothing
  uint64_t projection_seed = 20240917;
  size_t embedding_dim = 64;
};

// Builtin reference classifier: multinomial Naive Bayes over TF-IDF term
// weights.
//
// Features are raw term counts scaled by idf = ln(N / df) + 1. Class
// conditionals are estimated from the class-mean feature vector with
// additive smoothing, so the fitted model is unchanged when the whole corpus
// is duplicated. Embeddings are the TF-IDF vector mapped through a seeded
// Rademacher projection (entries +-1/sqrt(dim)).
class NaiveBayesModel final : public Model {
 public:
  // Throws Error(kDegenerateCorpus) unless the corpus has >= 2 labels.
  static std::shared_ptr<NaiveBayesModel> Train(std::span<const LabeledText> corpus,
                                                const NaiveBayesOptions& options = {});

  static std::shared_ptr<NaiveBayesModel> FromJson(std::string_view json);
  static std::shared_ptr<NaiveBayesModel> Load(const std::string& path);
  std::string ToJson() const;
  void Save(const std::string& path) const;

  const ModelInfo& info() const override { return info_; }
  std::vector<RawResult> Predict(std::span<const std::string> texts) override;
  std::vector<RawResult> Embed(std::span<const std::string> texts) override;

  // Exact class posterior, ordered like labels().
  std::vector<double> Posterior(std::string_view text) const;
  std::vector<double> Embedding(std::string_view text) const;

  // Unnormalized log joint log P(c) + sum_w x_w log P(w|c).
  std::vector<double> LogJoint(std::string_view text) const;

  const std::vector<std::string>& labels() const { return info_.labels; }
  const std::vector<std::string>& vocab() const { return vocab_; }
  const std::vector<double>& idf() const { return idf_; }
  const std::vector<double>& class_log_priors() const { return class_log_priors_; }
  // [class][term]
  const std::vector<std::vector<double>>& log_likelihoods() const {
    return log_likelihoods_;
  }
  uint64_t projection_seed() const { return projection_seed_; }
  size_t embedding_dim() const { return embedding_dim_; }

  // Projection matrix, row-major [dim][term]; regenerated from the seed.
  const std::vector<double>& projection() const { return projection_; }

  // Lowercased word tokens that carry letters or digits.
  static std::vector<std::string> Tokenize(std::string_view text);

 private:
  NaiveBayesModel() = default;
  void Finalize();

  ModelInfo info_;
  std::vector<std::string> vocab_;
  std::unordered_map<std::string, size_t> vocab_index_;
  std::vector<double> idf_;
  std::vector<double> class_log_priors_;
  std::vector<std::vector<double>> log_likelihoods_;
  uint64_t projection_seed_ = 0;
  size_t embedding_dim_ = 64;
  double alpha_ = 1.0;
  std::vector<double> projection_;
};

// Rademacher projection used by the builtin model; column t (term t) is
// drawn after columns 0..t-1, dim entries per column.
std::vector<double> RademacherProjection(uint64_t seed, size_t dim, size_t n_terms);

}  // namespace gutek
