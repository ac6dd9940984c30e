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

#include "cli_util.h"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "gutek/error.h"
#include "gutek/subprocess_model.h"
#include "json.hpp"

namespace gutek::cli {

using nlohmann::json;

std::shared_ptr<Model> OpenModel(const std::string& spec) {
  constexpr std::string_view kBuiltin = "builtin:";
  constexpr std::string_view kSubprocess = "subprocess:";
  if (spec.starts_with(kBuiltin)) {
    try {
      return NaiveBayesModel::Load(spec.substr(kBuiltin.size()));
    } catch (const Error& e) {
      throw Error(ErrorCode::kModelUnavailable, e.what());
    }
  }
  if (spec.starts_with(kSubprocess)) {
    return std::make_shared<SubprocessModel>(spec.substr(kSubprocess.size()));
  }
  throw Error(ErrorCode::kInvalidArgument,
              "model must be builtin:PATH or subprocess:COMMAND, got '" + spec + "'");
}

std::unique_ptr<ModelHandle> OpenHandle(const std::string& spec, size_t batch_size, bool cache) {
  if (batch_size == 0) throw Error(ErrorCode::kInvalidArgument, "batch size must be positive");
  HandleOptions options;
  options.batch_size = batch_size;
  options.cache = cache;
  if (const char* dir = std::getenv("GUTEK_CACHE_DIR"); cache && dir != nullptr && *dir) {
    options.cache_dir = dir;
  }
  return std::make_unique<ModelHandle>(OpenModel(spec), options);
}

std::string ReadInput(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace {

template <typename Fn>
void ForEachJsonLine(const std::string& path, Fn&& fn) {
  std::istringstream in(ReadInput(path));
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const std::string where = path + ":" + std::to_string(line_no) + ": ";
    const json j = json::parse(line, nullptr, false);
    if (j.is_discarded()) throw Error(ErrorCode::kParseError, where + "invalid JSON");
    try {
      fn(j);
    } catch (const json::exception& e) {
      throw Error(ErrorCode::kParseError, where + e.what());
    }
  }
}

}  // namespace

std::vector<std::string> ReadTexts(const std::string& path) {
  std::vector<std::string> texts;
  ForEachJsonLine(path, [&](const json& j) {
    texts.push_back(j.is_string() ? j.get<std::string>() : j.at("text").get<std::string>());
  });
  return texts;
}

std::vector<LabeledText> ReadLabeledTexts(const std::string& path) {
  std::vector<LabeledText> corpus;
  ForEachJsonLine(path, [&](const json& j) {
    corpus.push_back({j.at("text").get<std::string>(), j.at("label").get<std::string>()});
  });
  return corpus;
}

void WriteTexts(const std::vector<std::string>& texts, const std::string& path) {
  std::string out;
  for (const std::string& t : texts) out += json{{"text", t}}.dump() + "\n";
  WriteOutput(path, out);
}

void WriteLabeledTexts(const std::vector<LabeledText>& corpus, const std::string& path) {
  std::string out;
  for (const LabeledText& t : corpus) {
    out += json{{"text", t.text}, {"label", t.label}}.dump() + "\n";
  }
  WriteOutput(path, out);
}

void WriteOutput(const std::string& path, const std::string& contents) {
  if (path.empty() || path == "-") {
    std::cout << contents << std::flush;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path);
  out << contents;
  if (!out.flush()) throw Error(ErrorCode::kIoError, "write failed for " + path);
}

std::shared_ptr<const AbbreviationSet> LoadAbbreviations(const std::string& path) {
  if (path.empty()) return AbbreviationSet::Bundled();
  return std::make_shared<const AbbreviationSet>(AbbreviationSet::FromFile(path));
}

void CheckBudget(uint64_t budget) {
  if (budget < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "--budget must be at least 2, got " + std::to_string(budget));
  }
}

}  // namespace gutek::cli
