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
#include <string>
#include <string_view>
#include <vector>

// Newline-delimited JSON protocol spoken with external model adapters.
//
//   adapter -> client (once): {"protocol": 1, "model_id": "...",
//                              "labels": [...], "capabilities": [...]}
//   client -> adapter:        {"id": 7, "op": "predict", "texts": [...]}
//   adapter -> client:        {"id": 7, "scores": [[...], ...]}
//                             {"id": 7, "vectors": [[...], ...]}
//                             {"id": 7, "error": "..."}
//
// A row of "scores"/"vectors" may be null to signal a per-item failure; an
// optional parallel "errors" array then carries the messages.
namespace gutek::protocol {

inline constexpr int kProtocolVersion = 1;

enum class Op { kPredict, kEmbed };

struct Handshake {
  int protocol = kProtocolVersion;
  std::string model_id;
  std::vector<std::string> labels;
  std::vector<std::string> capabilities;

  bool Has(std::string_view capability) const;
  friend bool operator==(const Handshake&, const Handshake&) = default;
};

struct Request {
  uint64_t id = 0;
  Op op = Op::kPredict;
  std::vector<std::string> texts;

  friend bool operator==(const Request&, const Request&) = default;
};

struct Response {
  enum class Kind { kScores, kVectors, kError };

  uint64_t id = 0;
  Kind kind = Kind::kScores;
  std::vector<std::optional<std::vector<double>>> rows;
  std::vector<std::optional<std::string>> item_errors;  // empty or rows.size()
  std::string error;                                    // kError only

  friend bool operator==(const Response&, const Response&) = default;
};

std::string_view OpName(Op op);

// Encoders produce a single line without the trailing newline. Decoders
// throw Error(kProtocolError) quoting the offending line.
std::string EncodeHandshake(const Handshake& h);
Handshake DecodeHandshake(std::string_view line);
std::string EncodeRequest(const Request& r);
Request DecodeRequest(std::string_view line);
std::string EncodeResponse(const Response& r);
Response DecodeResponse(std::string_view line);

}  // namespace gutek::protocol
