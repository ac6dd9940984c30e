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

#include "gutek/naive_bayes.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "gutek/error.h"
#include "gutek/random.h"
#include "gutek/segmentation.h"
#include "gutek/sha256.h"
#include "gutek/unicode.h"
#include "json.hpp"

namespace gutek {

namespace {

using nlohmann::json;

std::map<size_t, double> TermCounts(
    const std::vector<std::string>& tokens,
    const std::unordered_map<std::string, size_t>& index) {
  std::map<size_t, double> counts;
  for (const std::string& tok : tokens) {
    const auto it = index.find(tok);
    if (it != index.end()) counts[it->second] += 1.0;
  }
  return counts;
}

std::vector<double> Softmax(const std::vector<double>& logits) {
  const double m = *std::max_element(logits.begin(), logits.end());
  double z = 0.0;
  std::vector<double> p(logits.size());
  for (size_t i = 0; i < logits.size(); ++i) {
    p[i] = std::exp(logits[i] - m);
    z += p[i];
  }
  for (double& v : p) v /= z;
  return p;
}

}  // namespace

std::vector<double> RademacherProjection(uint64_t seed, size_t dim, size_t n_terms) {
  std::vector<double> r(dim * n_terms);
  Rng rng(seed);
  const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
  for (size_t t = 0; t < n_terms; ++t) {
    for (size_t k = 0; k < dim; ++k) {
      r[k * n_terms + t] = rng.FairCoin() ? scale : -scale;
    }
  }
  return r;
}

std::vector<std::string> NaiveBayesModel::Tokenize(std::string_view text) {
  const Document doc = SplitWords(text);
  std::vector<std::string> tokens;
  tokens.reserve(doc.size());
  for (size_t i = 0; i < doc.size(); ++i) {
    const std::string_view tok = doc.SegmentText(i);
    const unicode::DecodedText d = unicode::Decode(tok);
    if (std::any_of(d.chars.begin(), d.chars.end(), unicode::IsWordChar)) {
      tokens.push_back(unicode::AsciiLower(tok));
    }
  }
  return tokens;
}

std::shared_ptr<NaiveBayesModel> NaiveBayesModel::Train(
    std::span<const LabeledText> corpus, const NaiveBayesOptions& options) {
  std::set<std::string> label_set;
  for (const LabeledText& ex : corpus) label_set.insert(ex.label);
  if (label_set.size() < 2) {
    throw Error(ErrorCode::kDegenerateCorpus,
                "training corpus needs at least two distinct labels, got " +
                    std::to_string(label_set.size()));
  }
  if (options.alpha <= 0.0 || options.embedding_dim == 0) {
    throw Error(ErrorCode::kInvalidArgument, "alpha and embedding_dim must be positive");
  }

  auto model = std::shared_ptr<NaiveBayesModel>(new NaiveBayesModel());
  model->info_.labels.assign(label_set.begin(), label_set.end());
  model->alpha_ = options.alpha;
  model->projection_seed_ = options.projection_seed;
  model->embedding_dim_ = options.embedding_dim;

  std::vector<std::vector<std::string>> docs;
  docs.reserve(corpus.size());
  std::set<std::string> vocab_set;
  for (const LabeledText& ex : corpus) {
    docs.push_back(Tokenize(ex.text));
    vocab_set.insert(docs.back().begin(), docs.back().end());
  }
  model->vocab_.assign(vocab_set.begin(), vocab_set.end());
  for (size_t t = 0; t < model->vocab_.size(); ++t) {
    model->vocab_index_[model->vocab_[t]] = t;
  }
  const size_t n_terms = model->vocab_.size();
  const size_t n_classes = model->info_.labels.size();
  const double n_docs = static_cast<double>(corpus.size());

  std::vector<double> df(n_terms, 0.0);
  std::vector<std::map<size_t, double>> counts;
  counts.reserve(docs.size());
  for (const auto& tokens : docs) {
    counts.push_back(TermCounts(tokens, model->vocab_index_));
    for (const auto& [t, _] : counts.back()) df[t] += 1.0;
  }
  model->idf_.resize(n_terms);
  for (size_t t = 0; t < n_terms; ++t) {
    model->idf_[t] = std::log(n_docs / df[t]) + 1.0;
  }

  std::vector<std::vector<double>> class_mean(n_classes, std::vector<double>(n_terms, 0.0));
  std::vector<double> class_docs(n_classes, 0.0);
  for (size_t d = 0; d < corpus.size(); ++d) {
    const auto c = static_cast<size_t>(
        std::lower_bound(model->info_.labels.begin(), model->info_.labels.end(),
                         corpus[d].label) -
        model->info_.labels.begin());
    class_docs[c] += 1.0;
    for (const auto& [t, n] : counts[d]) class_mean[c][t] += n * model->idf_[t];
  }

  model->class_log_priors_.resize(n_classes);
  model->log_likelihoods_.assign(n_classes, std::vector<double>(n_terms));
  for (size_t c = 0; c < n_classes; ++c) {
    model->class_log_priors_[c] = std::log(class_docs[c] / n_docs);
    double total = 0.0;
    for (double& v : class_mean[c]) {
      v /= class_docs[c];
      total += v;
    }
    const double denom = total + options.alpha * static_cast<double>(n_terms);
    for (size_t t = 0; t < n_terms; ++t) {
      model->log_likelihoods_[c][t] = std::log((class_mean[c][t] + options.alpha) / denom);
    }
  }
  model->Finalize();
  return model;
}

void NaiveBayesModel::Finalize() {
  vocab_index_.clear();
  for (size_t t = 0; t < vocab_.size(); ++t) vocab_index_[vocab_[t]] = t;
  projection_ = RademacherProjection(projection_seed_, embedding_dim_, vocab_.size());
  info_.can_predict = true;
  info_.can_embed = true;
  info_.model_id = "builtin-nb-" + Sha256Hex(ToJson()).substr(0, 16);
}

std::string NaiveBayesModel::ToJson() const {
  json j;
  j["vocab"] = vocab_;
  j["class_log_priors"] = class_log_priors_;
  j["log_likelihoods"] = log_likelihoods_;
  j["labels"] = info_.labels;
  j["projection_seed"] = projection_seed_;
  j["idf"] = idf_;
  j["alpha"] = alpha_;
  j["embedding_dim"] = embedding_dim_;
  return j.dump();
}

std::shared_ptr<NaiveBayesModel> NaiveBayesModel::FromJson(std::string_view text) {
  auto model = std::shared_ptr<NaiveBayesModel>(new NaiveBayesModel());
  try {
    const json j = json::parse(text);
    model->vocab_ = j.at("vocab").get<std::vector<std::string>>();
    model->class_log_priors_ = j.at("class_log_priors").get<std::vector<double>>();
    model->log_likelihoods_ = j.at("log_likelihoods").get<std::vector<std::vector<double>>>();
    model->info_.labels = j.at("labels").get<std::vector<std::string>>();
    model->projection_seed_ = j.at("projection_seed").get<uint64_t>();
    model->idf_ = j.contains("idf") ? j["idf"].get<std::vector<double>>()
                                    : std::vector<double>(model->vocab_.size(), 1.0);
    model->alpha_ = j.value("alpha", 1.0);
    model->embedding_dim_ = j.value("embedding_dim", size_t{64});
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParseError, std::string("invalid model file: ") + e.what());
  }
  const size_t n_classes = model->info_.labels.size();
  bool ok = n_classes >= 2 && model->class_log_priors_.size() == n_classes &&
            model->log_likelihoods_.size() == n_classes &&
            model->idf_.size() == model->vocab_.size() && model->embedding_dim_ > 0;
  for (const auto& row : model->log_likelihoods_) {
    ok = ok && row.size() == model->vocab_.size();
  }
  if (!ok) throw Error(ErrorCode::kParseError, "model file has inconsistent dimensions");
  model->Finalize();
  return model;
}

std::shared_ptr<NaiveBayesModel> NaiveBayesModel::Load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot read model file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return FromJson(buf.str());
}

void NaiveBayesModel::Save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write model file " + path);
  out << ToJson() << '\n';
}

std::vector<double> NaiveBayesModel::LogJoint(std::string_view text) const {
  const auto counts = TermCounts(Tokenize(text), vocab_index_);
  std::vector<double> logits = class_log_priors_;
  for (size_t c = 0; c < logits.size(); ++c) {
    for (const auto& [t, n] : counts) {
      logits[c] += n * idf_[t] * log_likelihoods_[c][t];
    }
  }
  return logits;
}

std::vector<double> NaiveBayesModel::Posterior(std::string_view text) const {
  return Softmax(LogJoint(text));
}

std::vector<double> NaiveBayesModel::Embedding(std::string_view text) const {
  const auto counts = TermCounts(Tokenize(text), vocab_index_);
  const size_t n_terms = vocab_.size();
  std::vector<double> e(embedding_dim_, 0.0);
  for (size_t k = 0; k < embedding_dim_; ++k) {
    for (const auto& [t, n] : counts) {
      e[k] += projection_[k * n_terms + t] * n * idf_[t];
    }
  }
  return e;
}

std::vector<RawResult> NaiveBayesModel::Predict(std::span<const std::string> texts) {
  std::vector<RawResult> out;
  out.reserve(texts.size());
  for (const std::string& t : texts) out.push_back(RawResult::Ok(Posterior(t)));
  return out;
}

std::vector<RawResult> NaiveBayesModel::Embed(std::span<const std::string> texts) {
  std::vector<RawResult> out;
  out.reserve(texts.size());
  for (const std::string& t : texts) out.push_back(RawResult::Ok(Embedding(t)));
  return out;
}

}  // namespace gutek
