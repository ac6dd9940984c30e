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
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace gutek {

enum class SegmentKind { kWord, kSentence, kParagraph };

std::string_view SegmentKindName(SegmentKind kind);
SegmentKind ParseSegmentKind(std::string_view name);

// One unit of a Document. Offsets are half-open; char_* count Unicode scalar
// values and byte_* index the UTF-8 text.
struct Segment {
  size_t index = 0;
  size_t char_start = 0;
  size_t char_end = 0;
  size_t byte_start = 0;
  size_t byte_end = 0;
  SegmentKind kind = SegmentKind::kWord;

  friend bool operator==(const Segment&, const Segment&) = default;
};

// Raw text plus its segmentation into sorted, non-overlapping, non-empty
// units of a single kind. Construction validates these invariants.
class Document {
 public:
  Document(std::string text, SegmentKind granularity,
           std::vector<Segment> segments);

  // Builds segments from scalar-value ranges [start, end) into text.
  static Document FromCharRanges(
      std::string text, SegmentKind granularity,
      std::span<const std::pair<size_t, size_t>> ranges);

  const std::string& text() const { return text_; }
  SegmentKind granularity() const { return granularity_; }
  std::span<const Segment> segments() const { return segments_; }
  const Segment& segment(size_t i) const { return segments_.at(i); }
  size_t size() const { return segments_.size(); }
  bool empty() const { return segments_.empty(); }

  std::string_view SegmentText(size_t i) const;

  // Whitespace between segment i-1 and i (i == 0: text before the first
  // segment; i == size(): text after the last one).
  std::string_view Gap(size_t i) const;

 private:
  std::string text_;
  SegmentKind granularity_;
  std::vector<Segment> segments_;
};

// Case-insensitive set of abbreviations written with their trailing period,
// e.g. "dr." or "e.g.".
class AbbreviationSet {
 public:
  AbbreviationSet() = default;

  // One entry per line; blank lines and lines starting with '#' are skipped.
  static AbbreviationSet Parse(std::string_view contents);
  static AbbreviationSet FromFile(const std::string& path);
  static std::shared_ptr<const AbbreviationSet> Bundled();

  bool Contains(std::string_view token_with_period) const;
  size_t size() const { return entries_.size(); }

 private:
  std::unordered_set<std::string> entries_;
};

Document SplitWords(std::string_view text);
Document SplitSentences(std::string_view text,
                        const AbbreviationSet& abbreviations =
                            *AbbreviationSet::Bundled());
Document SplitParagraphs(std::string_view text);

class Segmenter {
 public:
  virtual ~Segmenter() = default;
  virtual Document Split(std::string_view text) const = 0;
  virtual SegmentKind kind() const = 0;
};

// Name -> segmenter lookup used by the CLI and the evaluation harness.
// Registration is not synchronized; populate before sharing across threads.
class SegmenterRegistry {
 public:
  // Registry holding "word", "sentence" and "paragraph".
  static SegmenterRegistry Default(
      std::shared_ptr<const AbbreviationSet> abbreviations =
          AbbreviationSet::Bundled());

  void Register(const std::string& name, std::shared_ptr<const Segmenter> s);

  // Throws Error(kUnknownSegmenter) for unregistered names.
  const Segmenter& Get(std::string_view name) const;
  bool Contains(std::string_view name) const;
  std::vector<std::string> Names() const;

 private:
  std::map<std::string, std::shared_ptr<const Segmenter>, std::less<>>
      segmenters_;
};

// Index of every word token of `words` lying inside each unit of `coarse`.
// Throws Error(kAlignmentError) if a token straddles or falls outside all
// units, or if the documents are built over different texts.
std::vector<std::vector<size_t>> AlignWords(const Document& words,
                                            const Document& coarse);

}  // namespace gutek
