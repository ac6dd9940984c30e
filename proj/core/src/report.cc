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

#include "gutek/report.h"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "json.hpp"

namespace gutek {

using nlohmann::ordered_json;

namespace {

std::string Dump(const ordered_json& j) { return j.dump(2) + "\n"; }

ordered_json Optional(const std::optional<double>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

// NaN and infinities are not JSON; they become null.
ordered_json Number(double v) { return std::isfinite(v) ? ordered_json(v) : ordered_json(); }

ordered_json ReportJson(const MetricReport& r) {
  return {{"mean_iou", r.mean_iou},
          {"mean_hpd", r.mean_hpd},
          {"mean_snr", r.mean_snr},
          {"n_examples", r.n_examples},
          {"n_snr_omitted", r.n_snr_omitted}};
}

ordered_json MeanStdJson(const MeanStd& m) { return {{"mean", m.mean}, {"std", m.std}}; }

std::string HtmlEscape(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&#39;"; break;
      case '\n': out += "<br>\n"; break;
      default: out += c;
    }
  }
  return out;
}

std::string Fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  std::string s(buf);
  if (s == "-0" || s.find_first_not_of("-0.") == std::string::npos) {
    if (s[0] == '-') s.erase(0, 1);
  }
  return s;
}

ordered_json OodJson(const OodResult& r) {
  return {{"scheme", r.scheme},
          {"accuracy", r.accuracy},
          {"oob_accuracy", r.oob_accuracy},
          {"selected_depth", r.selected_depth},
          {"n_texts_used", r.n_texts_used},
          {"n_skipped", r.n_skipped},
          {"n_train", r.n_train},
          {"n_test", r.n_test}};
}

}  // namespace

std::string ExplanationJson(const Explanation& e, const RunInfo& run) {
  ordered_json units = ordered_json::array();
  const Document& doc = e.document;
  for (size_t i = 0; i < doc.size(); ++i) {
    const Segment& s = doc.segment(i);
    units.push_back({{"index", s.index},
                     {"char_start", s.char_start},
                     {"char_end", s.char_end},
                     {"text", std::string(doc.SegmentText(i))},
                     {"score", e.unit_scores[i]}});
  }
  ordered_json j{{"model_id", run.model_id},
                 {"method", std::string(MethodName(e.method))},
                 {"granularity", std::string(SegmentKindName(doc.granularity()))},
                 {"budget", run.budget},
                 {"seed", run.seed},
                 {"target_class", e.target_class},
                 {"target_label", e.target_label},
                 {"intercept", e.intercept},
                 {"fit_r2", Number(e.fit_r2)},
                 {"n_samples", e.n_samples},
                 {"ridge_used", e.ridge_used},
                 {"text", doc.text()},
                 {"units", std::move(units)}};
  return Dump(j);
}

std::string ExplanationHtml(const Explanation& e, const RunInfo& run) {
  const Document& doc = e.document;
  double max_abs = 0.0;
  for (double s : e.unit_scores) max_abs = std::max(max_abs, std::abs(s));

  std::string body;
  for (size_t i = 0; i < doc.size(); ++i) {
    body += HtmlEscape(doc.Gap(i));
    const double s = e.unit_scores[i];
    const double alpha = max_abs > 0.0 ? std::abs(s) / max_abs : 0.0;
    const char* rgb = s < 0.0 ? "220,38,38" : "22,163,74";
    body += "<span class=\"unit\" data-index=\"" + std::to_string(i) + "\" data-score=\"" +
            Fixed(s, 6) + "\" style=\"background-color: rgba(" + rgb + "," + Fixed(alpha, 3) +
            ")\" title=\"" + Fixed(s, 6) + "\">" + HtmlEscape(doc.SegmentText(i)) + "</span>";
  }
  body += HtmlEscape(doc.Gap(doc.size()));

  std::string html;
  html += "<!DOCTYPE html>\n<html lang=\"en\">\n<head>\n<meta charset=\"utf-8\">\n";
  html += "<title>GUTEK explanation</title>\n<style>\n";
  html += "body { font-family: Georgia, serif; max-width: 48em; margin: 2em auto; "
          "line-height: 1.6; }\n";
  html += ".unit { border-radius: 3px; padding: 1px 0; }\n";
  html += ".legend { font-family: sans-serif; font-size: 0.9em; border-top: 1px solid #ccc; "
          "margin-top: 2em; padding-top: 1em; }\n";
  html += ".swatch { display: inline-block; width: 1em; height: 1em; "
          "vertical-align: middle; }\n";
  html += "</style>\n</head>\n<body>\n<div class=\"text\">\n";
  html += body;
  html += "\n</div>\n<div class=\"legend\">\n";
  html += "<p><span class=\"swatch\" style=\"background-color: rgba(22,163,74,1)\"></span> "
          "supports the target class &nbsp; "
          "<span class=\"swatch\" style=\"background-color: rgba(220,38,38,1)\"></span> "
          "opposes the target class</p>\n";
  html += "<table>\n";
  html += "<tr><th align=\"left\">Target class</th><td>" + HtmlEscape(e.target_label) + " (" +
          std::to_string(e.target_class) + ")</td></tr>\n";
  html += "<tr><th align=\"left\">Intercept</th><td>" + Fixed(e.intercept, 6) + "</td></tr>\n";
  html += "<tr><th align=\"left\">R&sup2;</th><td>" + Fixed(e.fit_r2, 6) + "</td></tr>\n";
  html += "<tr><th align=\"left\">Method</th><td>" + std::string(MethodName(e.method)) + " (" +
          std::string(SegmentKindName(doc.granularity())) + ", " +
          std::to_string(e.n_samples) + " samples)</td></tr>\n";
  html += "<tr><th align=\"left\">Model</th><td>" + HtmlEscape(run.model_id) + "</td></tr>\n";
  html += "</table>\n</div>\n</body>\n</html>\n";
  return html;
}

std::string FidelityReportJson(const FidelityResult& result, const RunInfo& run) {
  ordered_json records = ordered_json::array();
  for (size_t i = 0; i < result.records.size(); ++i) {
    const EvalRecord& r = result.records[i];
    records.push_back({{"example", result.example_index[i]},
                       {"scores", r.scores},
                       {"ground_truth", r.ground_truth},
                       {"iou", r.iou},
                       {"hpd", r.hpd},
                       {"snr", Optional(r.snr)}});
  }
  ordered_json j{{"task_id", result.task_id},
                 {"interpreter", result.interpreter},
                 {"model_id", run.model_id},
                 {"budget", run.budget},
                 {"seed", run.seed},
                 {"report", ReportJson(result.report)},
                 {"n_skipped", result.n_skipped},
                 {"records", std::move(records)}};
  return Dump(j);
}

std::string InsertionReportJson(std::span<const InsertionCase> cases,
                                const InsertionResult& result, const std::string& build_segmenter,
                                const std::string& explain_segmenter, const RunInfo& run) {
  ordered_json per_case = ordered_json::array();
  for (size_t i = 0; i < cases.size(); ++i) {
    const InsertionCase& c = cases[i];
    per_case.push_back({{"source_class", c.source_class},
                        {"host_class", c.host_class},
                        {"inserted_units", {c.inserted_units.first, c.inserted_units.second}},
                        {"inserted_words", {c.inserted_words.first, c.inserted_words.second}},
                        {"source_prob_before", c.source_prob_before},
                        {"source_prob_after", c.source_prob_after},
                        {"detected_iou", result.per_case[i]}});
  }
  ordered_json j{{"model_id", run.model_id},
                 {"build_segmenter", build_segmenter},
                 {"explain_segmenter", explain_segmenter},
                 {"budget", run.budget},
                 {"seed", run.seed},
                 {"n_cases", cases.size()},
                 {"mean_iou", result.mean_iou},
                 {"std_iou", result.std_iou},
                 {"cases", std::move(per_case)}};
  return Dump(j);
}

std::string NeighborhoodStatsJson(const NeighborhoodStats& s) {
  ordered_json j{{"n_units", s.n_units},
                 {"log2_size", s.log2_size},
                 {"log10_size", s.log10_size},
                 {"size", Number(s.size)},
                 {"budget", s.budget},
                 {"explored_fraction", s.explored_fraction}};
  return Dump(j);
}

std::string WassersteinJson(double distance, const EmbeddingSet& a, const EmbeddingSet& b,
                            uint64_t seed) {
  ordered_json j{{"w1", distance},
                 {"n_a", a.vectors.size()},
                 {"n_b", b.vectors.size()},
                 {"n_matched", std::min(a.vectors.size(), b.vectors.size())},
                 {"dim", a.dim()},
                 {"seed", seed}};
  return Dump(j);
}

std::string OodReportJson(const std::pair<OodResult, OodResult>& results, uint64_t seed) {
  ordered_json j{{"seed", seed},
                 {"schemes", {OodJson(results.first), OodJson(results.second)}}};
  return Dump(j);
}

std::string SegStatsJson(const SegStats& stats, const std::string& segmenter) {
  ordered_json j{{"segmenter", segmenter},
                 {"n_texts", stats.n_texts},
                 {"n_skipped", stats.n_skipped},
                 {"segments_per_text", MeanStdJson(stats.segments_per_text)},
                 {"words_per_segment", MeanStdJson(stats.words_per_segment)},
                 {"seconds_per_text", MeanStdJson(stats.seconds_per_text)}};
  return Dump(j);
}

}  // namespace gutek
