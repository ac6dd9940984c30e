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

#include "gutek/model.h"

#include <algorithm>
#include <exception>

#include "gutek/error.h"

namespace gutek {

size_t ModelOutput::Argmax() const {
  // First maximum wins, so ties resolve to the lowest class index.
  return static_cast<size_t>(
      std::max_element(scores.begin(), scores.end()) - scores.begin());
}

std::vector<RawResult> Model::Embed(std::span<const std::string>) {
  throw Error(ErrorCode::kUnsupportedCapability,
              "model '" + info().model_id + "' does not provide embeddings");
}

FunctionModel::FunctionModel(ModelInfo info, Fn predict, Fn embed)
    : info_(std::move(info)), predict_(std::move(predict)), embed_(std::move(embed)) {
  info_.can_predict = static_cast<bool>(predict_);
  info_.can_embed = static_cast<bool>(embed_);
}

namespace {

std::vector<RawResult> Apply(const FunctionModel::Fn& fn,
                             std::span<const std::string> texts) {
  std::vector<RawResult> out;
  out.reserve(texts.size());
  for (const std::string& t : texts) {
    try {
      out.push_back(RawResult::Ok(fn(t)));
    } catch (const std::exception& e) {
      out.push_back(RawResult::Fail(e.what()));
    }
  }
  return out;
}

}  // namespace

std::vector<RawResult> FunctionModel::Predict(std::span<const std::string> texts) {
  if (!predict_) {
    throw Error(ErrorCode::kUnsupportedCapability, "model cannot predict");
  }
  return Apply(predict_, texts);
}

std::vector<RawResult> FunctionModel::Embed(std::span<const std::string> texts) {
  if (!embed_) return Model::Embed(texts);
  return Apply(embed_, texts);
}

}  // namespace gutek
