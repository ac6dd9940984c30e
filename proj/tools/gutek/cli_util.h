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

#include <memory>
#include <string>
#include <vector>

#include "gutek/model_handle.h"
#include "gutek/naive_bayes.h"
#include "gutek/segmentation.h"

namespace gutek::cli {

// "builtin:PATH" (a saved NaiveBayesModel) or "subprocess:COMMAND".
std::shared_ptr<Model> OpenModel(const std::string& spec);

// Handle over OpenModel(spec); the disk cache directory comes from
// GUTEK_CACHE_DIR when set.
std::unique_ptr<ModelHandle> OpenHandle(const std::string& spec, size_t batch_size, bool cache);

// Whole file, or standard input for "-".
std::string ReadInput(const std::string& path);

// JSONL: each line is a JSON string or an object with a "text" field.
std::vector<std::string> ReadTexts(const std::string& path);

// JSONL of {"text": str, "label": str}.
std::vector<LabeledText> ReadLabeledTexts(const std::string& path);

void WriteTexts(const std::vector<std::string>& texts, const std::string& path);
void WriteLabeledTexts(const std::vector<LabeledText>& corpus, const std::string& path);

// Writes to the file, or to standard output for "" and "-".
void WriteOutput(const std::string& path, const std::string& contents);

std::shared_ptr<const AbbreviationSet> LoadAbbreviations(const std::string& path);

// Throws Error(kInvalidArgument) unless budget >= 2.
void CheckBudget(uint64_t budget);

}  // namespace gutek::cli
