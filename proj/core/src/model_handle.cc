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

#include "gutek/model_handle.h"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "gutek/error.h"
#include "gutek/sha256.h"
#include "json.hpp"

namespace gutek {

namespace fs = std::filesystem;

namespace {

constexpr double kSumTolerance = 1e-6;
constexpr double kRangeSlack = 1e-12;

std::string SafeName(const std::string& model_id) {
  std::string out;
  for (char c : model_id) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                    (c >= '0' && c <= '9') || c == '-' || c == '_' || c == '.';
    out.push_back(ok ? c : '_');
  }
  return out.empty() ? std::string("model") : out;
}

}  // namespace

ModelHandle::ModelHandle(std::shared_ptr<Model> backend, HandleOptions options)
    : backend_(std::move(backend)), options_(std::move(options)) {
  if (!backend_) throw Error(ErrorCode::kInvalidArgument, "model handle needs a backend");
  if (options_.batch_size == 0) {
    throw Error(ErrorCode::kInvalidArgument, "batch size must be positive");
  }
  labels_ = std::make_shared<const std::vector<std::string>>(backend_->info().labels);
}

CacheStats ModelHandle::stats() const {
  std::lock_guard<std::mutex> lock(mu_);
  return stats_;
}

RawResult ModelHandle::Validate(Kind kind, RawResult r) {
  if (!r.ok()) return r;
  const std::vector<double>& v = *r.value;
  for (double x : v) {
    if (!std::isfinite(x)) return RawResult::Fail("BadResponse: non-finite value");
  }
  if (kind == Kind::kPredict) {
    if (v.size() != labels_->size()) {
      return RawResult::Fail("BadResponse: expected " + std::to_string(labels_->size()) +
                             " class scores, got " + std::to_string(v.size()));
    }
    double sum = 0.0;
    for (double x : v) {
      if (x < -kRangeSlack || x > 1.0 + kRangeSlack) {
        return RawResult::Fail("BadResponse: score outside [0, 1]");
      }
      sum += x;
    }
    if (std::abs(sum - 1.0) > kSumTolerance) {
      return RawResult::Fail("BadResponse: scores do not sum to 1");
    }
  } else {
    if (v.empty()) return RawResult::Fail("BadResponse: empty embedding");
    if (!embedding_dim_) embedding_dim_ = v.size();
    if (v.size() != *embedding_dim_) {
      return RawResult::Fail("BadResponse: embedding length changed from " +
                             std::to_string(*embedding_dim_) + " to " +
                             std::to_string(v.size()));
    }
  }
  return r;
}

std::optional<std::vector<double>> ModelHandle::DiskLookup(Kind kind,
                                                           const std::string& key) const {
  if (options_.cache_dir.empty()) return std::nullopt;
  const fs::path path = fs::path(options_.cache_dir) / SafeName(info().model_id) /
                        (kind == Kind::kPredict ? "predict" : "embed") / (key + ".json");
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  const auto j = nlohmann::json::parse(buf.str(), nullptr, false);
  if (j.is_discarded() || !j.is_object() || !j.contains("values")) return std::nullopt;
  try {
    return j["values"].get<std::vector<double>>();
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;
  }
}

void ModelHandle::DiskStore(Kind kind, const std::string& key,
                            const std::vector<double>& values) const {
  if (options_.cache_dir.empty()) return;
  const fs::path dir = fs::path(options_.cache_dir) / SafeName(info().model_id) /
                       (kind == Kind::kPredict ? "predict" : "embed");
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) return;
  // Write-then-rename so concurrent runs never observe partial entries.
  const fs::path final_path = dir / (key + ".json");
  const fs::path tmp = dir / (key + ".tmp" + std::to_string(::getpid()));
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << nlohmann::json{{"values", values}}.dump() << '\n';
  }
  fs::rename(tmp, final_path, ec);
}

std::vector<RawResult> ModelHandle::Query(Kind kind, std::span<const std::string> texts) {
  if (texts.empty()) {
    throw Error(ErrorCode::kInvalidRequest, "batch must contain at least one text");
  }
  if (kind == Kind::kEmbed && !info().can_embed) {
    throw Error(ErrorCode::kUnsupportedCapability,
                "model '" + info().model_id + "' does not provide embeddings");
  }
  std::lock_guard<std::mutex> lock(mu_);
  auto& cache = kind == Kind::kPredict ? predict_cache_ : embed_cache_;

  std::vector<RawResult> results(texts.size());
  std::vector<std::string> keys(texts.size());
  // Unique texts still to be fetched, with every slot that wants them.
  std::vector<std::string> pending;
  std::vector<std::string> pending_keys;
  std::unordered_map<std::string, std::vector<size_t>> waiting;
  for (size_t i = 0; i < texts.size(); ++i) {
    if (!options_.cache) {
      keys[i] = std::to_string(i);
      pending.push_back(texts[i]);
      pending_keys.push_back(keys[i]);
      waiting[keys[i]].push_back(i);
      continue;
    }
    keys[i] = Sha256Hex(texts[i]);
    if (const auto it = cache.find(keys[i]); it != cache.end()) {
      results[i] = RawResult::Ok(it->second);
      ++stats_.hits;
      continue;
    }
    if (auto disk = DiskLookup(kind, keys[i])) {
      RawResult r = Validate(kind, RawResult::Ok(std::move(*disk)));
      if (r.ok()) {
        cache.emplace(keys[i], *r.value);
        results[i] = std::move(r);
        ++stats_.hits;
        continue;
      }
    }
    auto& slots = waiting[keys[i]];
    if (slots.empty()) {
      pending.push_back(texts[i]);
      pending_keys.push_back(keys[i]);
      ++stats_.misses;
    } else {
      ++stats_.hits;
    }
    slots.push_back(i);
  }

  for (size_t begin = 0; begin < pending.size(); begin += options_.batch_size) {
    const size_t end = std::min(pending.size(), begin + options_.batch_size);
    const std::span<const std::string> chunk(pending.data() + begin, end - begin);
    std::vector<RawResult> raw = kind == Kind::kPredict ? backend_->Predict(chunk)
                                                        : backend_->Embed(chunk);
    ++stats_.backend_batches;
    if (raw.size() != chunk.size()) {
      throw Error(ErrorCode::kProtocolError, "backend returned " + std::to_string(raw.size()) +
                                                 " results for " +
                                                 std::to_string(chunk.size()) + " texts");
    }
    for (size_t k = 0; k < chunk.size(); ++k) {
      RawResult r = Validate(kind, std::move(raw[k]));
      const std::string& key = pending_keys[begin + k];
      if (r.ok() && options_.cache) {
        cache.emplace(key, *r.value);
        DiskStore(kind, key, *r.value);
      }
      for (size_t slot : waiting[key]) results[slot] = r;
    }
  }
  return results;
}

std::vector<ItemResult<ModelOutput>> ModelHandle::PredictBatch(
    std::span<const std::string> texts) {
  std::vector<RawResult> raw = Query(Kind::kPredict, texts);
  std::vector<ItemResult<ModelOutput>> out;
  out.reserve(raw.size());
  for (RawResult& r : raw) {
    if (r.ok()) {
      out.push_back(ItemResult<ModelOutput>::Ok(ModelOutput{std::move(*r.value), labels_}));
    } else {
      out.push_back(ItemResult<ModelOutput>::Fail(std::move(r.error)));
    }
  }
  return out;
}

std::vector<ItemResult<EmbeddingVector>> ModelHandle::EmbedBatch(
    std::span<const std::string> texts) {
  std::vector<RawResult> raw = Query(Kind::kEmbed, texts);
  std::vector<ItemResult<EmbeddingVector>> out;
  out.reserve(raw.size());
  for (RawResult& r : raw) {
    if (r.ok()) {
      out.push_back(ItemResult<EmbeddingVector>::Ok(
          EmbeddingVector{std::move(*r.value), info().model_id}));
    } else {
      out.push_back(ItemResult<EmbeddingVector>::Fail(std::move(r.error)));
    }
  }
  return out;
}

namespace {

template <typename T>
std::vector<T> Unwrap(std::vector<ItemResult<T>> items) {
  std::vector<T> out;
  out.reserve(items.size());
  for (size_t i = 0; i < items.size(); ++i) {
    if (!items[i].ok()) {
      throw Error(ErrorCode::kBadResponse,
                  "model failed on item " + std::to_string(i) + ": " + items[i].error);
    }
    out.push_back(std::move(*items[i].value));
  }
  return out;
}

}  // namespace

std::vector<ModelOutput> ModelHandle::PredictAll(std::span<const std::string> texts) {
  return Unwrap(PredictBatch(texts));
}

std::vector<EmbeddingVector> ModelHandle::EmbedAll(std::span<const std::string> texts) {
  return Unwrap(EmbedBatch(texts));
}

}  // namespace gutek
