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

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gutek {

// Class probabilities returned by a classifier for one text.
struct ModelOutput {
  std::vector<double> scores;
  std::shared_ptr<const std::vector<std::string>> class_labels;

  size_t Argmax() const;

  friend bool operator==(const ModelOutput& a, const ModelOutput& b) {
    return a.scores == b.scores;
  }
};

struct EmbeddingVector {
  std::vector<double> values;
  std::string model_id;

  friend bool operator==(const EmbeddingVector&, const EmbeddingVector&) = default;
};

// Outcome of one item of a batch: a value, or the reason it failed.
template <typename T>
struct ItemResult {
  std::optional<T> value;
  std::string error;

  bool ok() const { return value.has_value(); }

  static ItemResult Ok(T v) { return ItemResult{std::move(v), {}}; }
  static ItemResult Fail(std::string why) { return ItemResult{std::nullopt, std::move(why)}; }
};

using RawResult = ItemResult<std::vector<double>>;

struct ModelInfo {
  std::string model_id;
  std::vector<std::string> labels;
  bool can_predict = true;
  bool can_embed = false;
};

// A black-box classifier backend. Implementations answer whole batches and
// report per-item failures without aborting the batch; transport failures
// are thrown as gutek::Error.
class Model {
 public:
  virtual ~Model() = default;

  virtual const ModelInfo& info() const = 0;

  // One probability vector per text, aligned with info().labels.
  virtual std::vector<RawResult> Predict(std::span<const std::string> texts) = 0;

  // Default implementation throws Error(kUnsupportedCapability).
  virtual std::vector<RawResult> Embed(std::span<const std::string> texts);
};

// Wraps plain functions as a model; used for oracles and tests.
class FunctionModel final : public Model {
 public:
  using Fn = std::function<std::vector<double>(const std::string&)>;

  FunctionModel(ModelInfo info, Fn predict, Fn embed = nullptr);

  const ModelInfo& info() const override { return info_; }
  std::vector<RawResult> Predict(std::span<const std::string> texts) override;
  std::vector<RawResult> Embed(std::span<const std::string> texts) override;

 private:
  ModelInfo info_;
  Fn predict_;
  Fn embed_;
};

}  // namespace gutek
