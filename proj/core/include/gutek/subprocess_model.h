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

#include <sys/types.h>

#include <chrono>
#include <cstdint>
#include <mutex>
#include <string>

#include "gutek/model.h"
#include "gutek/protocol.h"

namespace gutek {

struct SubprocessOptions {
  std::chrono::milliseconds handshake_timeout{30'000};
  std::chrono::milliseconds request_timeout{600'000};
};

// Client for an external model adapter started as `/bin/sh -c command`.
// Requests are serialized: one in flight at a time, matched by id. Any
// transport failure (exit, timeout, desync) leaves the client unusable and
// later calls throw Error(kModelUnavailable).
class SubprocessModel final : public Model {
 public:
  explicit SubprocessModel(const std::string& command,
                           SubprocessOptions options = {});
  ~SubprocessModel() override;

  SubprocessModel(const SubprocessModel&) = delete;
  SubprocessModel& operator=(const SubprocessModel&) = delete;

  const ModelInfo& info() const override { return info_; }
  std::vector<RawResult> Predict(std::span<const std::string> texts) override;
  std::vector<RawResult> Embed(std::span<const std::string> texts) override;

  const protocol::Handshake& handshake() const { return handshake_; }
  uint64_t requests_sent() const;

 private:
  std::vector<RawResult> Call(protocol::Op op, std::span<const std::string> texts);
  std::string ReadLine(std::chrono::milliseconds timeout);
  void WriteLine(const std::string& line);
  void Shutdown();

  SubprocessOptions options_;
  std::string command_;
  pid_t pid_ = -1;
  int to_child_ = -1;
  int from_child_ = -1;
  std::string buffer_;
  bool broken_ = false;
  uint64_t next_id_ = 1;
  protocol::Handshake handshake_;
  ModelInfo info_;
  mutable std::mutex mu_;
};

}  // namespace gutek
