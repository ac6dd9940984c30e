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

#include "gutek/protocol.h"

#include <algorithm>

#include "gutek/error.h"
#include "json.hpp"

namespace gutek::protocol {

namespace {

using nlohmann::json;

[[noreturn]] void Fail(std::string_view what, std::string_view line) {
  constexpr size_t kMaxQuoted = 512;
  std::string quoted(line.substr(0, kMaxQuoted));
  if (line.size() > kMaxQuoted) quoted += "...";
  throw Error(ErrorCode::kProtocolError,
              std::string(what) + "; offending line: " + quoted);
}

json ParseObject(std::string_view line) {
  json j = json::parse(line, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded() || !j.is_object()) Fail("not a JSON object", line);
  return j;
}

uint64_t ParseId(const json& j, std::string_view line) {
  const auto it = j.find("id");
  if (it == j.end() || !it->is_number_unsigned()) {
    // Small non-negative integers parse as signed in some producers.
    if (it != j.end() && it->is_number_integer() && it->get<int64_t>() >= 0) {
      return static_cast<uint64_t>(it->get<int64_t>());
    }
    Fail("missing or non-integer \"id\"", line);
  }
  return it->get<uint64_t>();
}

std::vector<std::string> StringArray(const json& j, const char* key,
                                     std::string_view line) {
  const auto it = j.find(key);
  if (it == j.end() || !it->is_array()) {
    Fail(std::string("missing array \"") + key + "\"", line);
  }
  std::vector<std::string> out;
  out.reserve(it->size());
  for (const json& v : *it) {
    if (!v.is_string()) Fail(std::string("non-string entry in \"") + key + "\"", line);
    out.push_back(v.get<std::string>());
  }
  return out;
}

}  // namespace

bool Handshake::Has(std::string_view capability) const {
  return std::find(capabilities.begin(), capabilities.end(), capability) !=
         capabilities.end();
}

std::string_view OpName(Op op) { return op == Op::kPredict ? "predict" : "embed"; }

std::string EncodeHandshake(const Handshake& h) {
  json j;
  j["protocol"] = h.protocol;
  j["model_id"] = h.model_id;
  j["labels"] = h.labels;
  j["capabilities"] = h.capabilities;
  return j.dump();
}

Handshake DecodeHandshake(std::string_view line) {
  const json j = ParseObject(line);
  Handshake h;
  const auto version = j.find("protocol");
  if (version == j.end() || !version->is_number_integer()) {
    Fail("handshake lacks integer \"protocol\"", line);
  }
  h.protocol = version->get<int>();
  if (h.protocol != kProtocolVersion) Fail("unsupported protocol version", line);
  const auto id = j.find("model_id");
  if (id == j.end() || !id->is_string()) Fail("handshake lacks \"model_id\"", line);
  h.model_id = id->get<std::string>();
  h.labels = StringArray(j, "labels", line);
  h.capabilities = StringArray(j, "capabilities", line);
  return h;
}

std::string EncodeRequest(const Request& r) {
  json j;
  j["id"] = r.id;
  j["op"] = OpName(r.op);
  j["texts"] = r.texts;
  return j.dump(-1, ' ', false, json::error_handler_t::replace);
}

Request DecodeRequest(std::string_view line) {
  const json j = ParseObject(line);
  Request r;
  r.id = ParseId(j, line);
  const auto op = j.find("op");
  if (op == j.end() || !op->is_string()) Fail("missing \"op\"", line);
  if (*op == "predict") {
    r.op = Op::kPredict;
  } else if (*op == "embed") {
    r.op = Op::kEmbed;
  } else {
    Fail("unknown op", line);
  }
  r.texts = StringArray(j, "texts", line);
  return r;
}

std::string EncodeResponse(const Response& r) {
  json j;
  j["id"] = r.id;
  if (r.kind == Response::Kind::kError) {
    j["error"] = r.error;
    return j.dump();
  }
  json rows = json::array();
  for (const auto& row : r.rows) {
    rows.push_back(row ? json(*row) : json(nullptr));
  }
  j[r.kind == Response::Kind::kScores ? "scores" : "vectors"] = std::move(rows);
  if (!r.item_errors.empty()) {
    json errors = json::array();
    for (const auto& e : r.item_errors) errors.push_back(e ? json(*e) : json(nullptr));
    j["errors"] = std::move(errors);
  }
  return j.dump();
}

Response DecodeResponse(std::string_view line) {
  const json j = ParseObject(line);
  Response r;
  r.id = ParseId(j, line);
  if (const auto e = j.find("error"); e != j.end()) {
    if (!e->is_string()) Fail("\"error\" must be a string", line);
    r.kind = Response::Kind::kError;
    r.error = e->get<std::string>();
    return r;
  }
  json::const_iterator rows;
  if ((rows = j.find("scores")) != j.end()) {
    r.kind = Response::Kind::kScores;
  } else if ((rows = j.find("vectors")) != j.end()) {
    r.kind = Response::Kind::kVectors;
  } else {
    Fail("response has neither \"scores\", \"vectors\" nor \"error\"", line);
  }
  if (!rows->is_array()) Fail("result rows must be an array", line);
  for (const json& row : *rows) {
    if (row.is_null()) {
      r.rows.emplace_back(std::nullopt);
      continue;
    }
    if (!row.is_array()) Fail("result row must be an array or null", line);
    std::vector<double> values;
    values.reserve(row.size());
    for (const json& v : row) {
      if (!v.is_number()) Fail("non-numeric value in result row", line);
      values.push_back(v.get<double>());
    }
    r.rows.emplace_back(std::move(values));
  }
  if (const auto errors = j.find("errors"); errors != j.end()) {
    if (!errors->is_array() || errors->size() != r.rows.size()) {
      Fail("\"errors\" must be an array parallel to the rows", line);
    }
    for (const json& e : *errors) {
      if (e.is_null()) {
        r.item_errors.emplace_back(std::nullopt);
      } else if (e.is_string()) {
        r.item_errors.emplace_back(e.get<std::string>());
      } else {
        Fail("\"errors\" entries must be strings or null", line);
      }
    }
  }
  return r;
}

}  // namespace gutek::protocol
