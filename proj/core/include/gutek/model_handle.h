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

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "gutek/model.h"

namespace gutek {

struct HandleOptions {
  size_t batch_size = 32;
  bool cache = true;
  // Optional on-disk cache shared across runs; empty disables it.
  std::string cache_dir;
};

struct CacheStats {
  size_t hits = 0;
  size_t misses = 0;
  size_t backend_batches = 0;
};

// The classifier under explanation as seen by the rest of the library.
//
// Splits requests into backend batches, memoizes results by
// (model_id, SHA-256 of text), and validates every response: prediction
// rows must be probability vectors over the advertised labels and embedding
// rows must be finite with one length per model. A failed item is reported
// in its slot and is never cached. Calls from multiple threads are
// serialized on an internal mutex.
class ModelHandle {
 public:
  explicit ModelHandle(std::shared_ptr<Model> backend, HandleOptions options = {});

  const ModelInfo& info() const { return backend_->info(); }
  const HandleOptions& options() const { return options_; }

  // Throws Error(kInvalidRequest) for an empty list.
  std::vector<ItemResult<ModelOutput>> PredictBatch(std::span<const std::string> texts);
  // Throws Error(kUnsupportedCapability) if the model cannot embed.
  std::vector<ItemResult<EmbeddingVector>> EmbedBatch(std::span<const std::string> texts);

  // As above, but the first failed item raises Error(kBadResponse).
  std::vector<ModelOutput> PredictAll(std::span<const std::string> texts);
  std::vector<EmbeddingVector> EmbedAll(std::span<const std::string> texts);

  CacheStats stats() const;

 private:
  enum class Kind { kPredict, kEmbed };

  std::vector<RawResult> Query(Kind kind, std::span<const std::string> texts);
  std::optional<std::vector<double>> DiskLookup(Kind kind, const std::string& key) const;
  void DiskStore(Kind kind, const std::string& key, const std::vector<double>& values) const;
  RawResult Validate(Kind kind, RawResult r);

  std::shared_ptr<Model> backend_;
  HandleOptions options_;
  std::shared_ptr<const std::vector<std::string>> labels_;
  std::unordered_map<std::string, std::vector<double>> predict_cache_;
  std::unordered_map<std::string, std::vector<double>> embed_cache_;
  std::optional<size_t> embedding_dim_;
  CacheStats stats_;
  mutable std::mutex mu_;
};

}  // namespace gutek
