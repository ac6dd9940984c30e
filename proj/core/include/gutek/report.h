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
#include <span>
#include <string>
#include <utility>

#include "gutek/diagnostics.h"
#include "gutek/eval.h"
#include "gutek/neighborhood.h"
#include "gutek/surrogate.h"
#include "gutek/wasserstein.h"

namespace gutek {

// Run parameters echoed into reports.
struct RunInfo {
  std::string model_id;
  uint64_t budget = 0;
  uint64_t seed = 0;
};

// All renderers return complete documents; JSON is indented by two spaces
// and ends with a newline.
std::string ExplanationJson(const Explanation& e, const RunInfo& run);

// Self-contained page: the original text with every unit highlighted, green
// for positive and red for negative scores, opacity |score| / max |score|.
std::string ExplanationHtml(const Explanation& e, const RunInfo& run);

std::string FidelityReportJson(const FidelityResult& result, const RunInfo& run);

std::string InsertionReportJson(std::span<const InsertionCase> cases,
                                const InsertionResult& result, const std::string& build_segmenter,
                                const std::string& explain_segmenter, const RunInfo& run);

std::string NeighborhoodStatsJson(const NeighborhoodStats& stats);

std::string WassersteinJson(double distance, const EmbeddingSet& a, const EmbeddingSet& b,
                            uint64_t seed);

std::string OodReportJson(const std::pair<OodResult, OodResult>& results, uint64_t seed);

std::string SegStatsJson(const SegStats& stats, const std::string& segmenter);

}  // namespace gutek
