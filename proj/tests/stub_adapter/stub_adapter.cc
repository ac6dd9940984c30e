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

// Scripted model adapter for protocol tests.
//
// Answers predict/embed requests with scores and vectors that depend only on
// the text, and can be told to misbehave after a number of requests.

#include <unistd.h>

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "gutek/protocol.h"

namespace {

using gutek::protocol::Op;
using gutek::protocol::Response;

uint64_t Fnv1a(const std::string& s) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// P(pos) in [0.05, 0.95], a function of the text only.
std::vector<double> Scores(const std::string& text) {
  const double p = 0.05 + 0.9 * static_cast<double>(Fnv1a(text) % 10007) / 10006.0;
  return {1.0 - p, p};
}

std::vector<double> Vector(const std::string& text, size_t dim) {
  std::vector<double> v(dim);
  uint64_t h = Fnv1a(text);
  for (size_t i = 0; i < dim; ++i) {
    h ^= h >> 33;
    h *= 0xff51afd7ed558ccdULL;
    h ^= h >> 33;
    v[i] = static_cast<double>(h % 2001) / 1000.0 - 1.0;
  }
  return v;
}

void Emit(const std::string& line) { std::cout << line << '\n' << std::flush; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"protocol stub adapter"};
  std::string model_id = "stub-v1";
  bool no_embed = false;
  bool bad_handshake = false;
  bool silent = false;
  size_t dim = 8;
  long crash_after = -1;
  long malformed_after = -1;
  long wrong_id_after = -1;
  long error_after = -1;
  long wrong_rows_after = -1;
  long sleep_after = -1;
  long bad_probs_after = -1;
  std::string fail_text;
  app.add_option("--model-id", model_id);
  app.add_flag("--no-embed", no_embed);
  app.add_flag("--bad-handshake", bad_handshake);
  app.add_flag("--silent", silent, "Never send a handshake");
  app.add_option("--dim", dim);
  app.add_option("--crash-after", crash_after);
  app.add_option("--malformed-after", malformed_after);
  app.add_option("--wrong-id-after", wrong_id_after);
  app.add_option("--error-after", error_after);
  app.add_option("--wrong-rows-after", wrong_rows_after);
  app.add_option("--sleep-after", sleep_after);
  app.add_option("--bad-probs-after", bad_probs_after);
  app.add_option("--fail-text", fail_text, "Fail items containing this substring");
  CLI11_PARSE(app, argc, argv);

  if (silent) {
    std::this_thread::sleep_for(std::chrono::seconds(30));
    return 0;
  }
  if (bad_handshake) {
    Emit("{\"protocol\": 1, \"model_id\": ");
    return 0;
  }
  gutek::protocol::Handshake hs;
  hs.model_id = model_id;
  hs.labels = {"neg", "pos"};
  hs.capabilities = {"predict"};
  if (!no_embed) hs.capabilities.push_back("embed");
  Emit(gutek::protocol::EncodeHandshake(hs));

  long served = 0;
  std::string line;
  while (std::getline(std::cin, line)) {
    if (served == crash_after) _exit(17);
    if (served == malformed_after) {
      Emit("this is not json");
      ++served;
      continue;
    }
    if (served == sleep_after) std::this_thread::sleep_for(std::chrono::seconds(30));
    Response r;
    gutek::protocol::Request req;
    try {
      req = gutek::protocol::DecodeRequest(line);
    } catch (const std::exception& e) {
      r.kind = Response::Kind::kError;
      r.error = e.what();
      Emit(gutek::protocol::EncodeResponse(r));
      ++served;
      continue;
    }
    r.id = served == wrong_id_after ? req.id + 1000 : req.id;
    if (served == error_after || (req.op == Op::kEmbed && no_embed)) {
      r.kind = Response::Kind::kError;
      r.error = served == error_after ? "scripted failure" : "embed not supported";
    } else {
      r.kind = req.op == Op::kPredict ? Response::Kind::kScores : Response::Kind::kVectors;
      bool any_failed = false;
      std::vector<std::optional<std::string>> errors;
      for (const std::string& text : req.texts) {
        if (!fail_text.empty() && text.find(fail_text) != std::string::npos) {
          r.rows.push_back(std::nullopt);
          errors.push_back("cannot score this text");
          any_failed = true;
          continue;
        }
        std::vector<double> row = req.op == Op::kPredict ? Scores(text) : Vector(text, dim);
        if (served == bad_probs_after && req.op == Op::kPredict) row[0] += 0.5;
        r.rows.push_back(std::move(row));
        errors.push_back(std::nullopt);
      }
      if (any_failed) r.item_errors = std::move(errors);
      if (served == wrong_rows_after && !r.rows.empty()) r.rows.pop_back();
    }
    Emit(gutek::protocol::EncodeResponse(r));
    ++served;
  }
  return 0;
}
