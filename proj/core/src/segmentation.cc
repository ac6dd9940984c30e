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

#include "gutek/segmentation.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "abbreviations_data.h"
#include "gutek/error.h"
#include "gutek/unicode.h"

namespace gutek {

namespace {

using unicode::DecodedText;

struct Span {
  size_t start;
  size_t end;
};

bool IsTerminatorChar(char32_t c) { return c == U'.' || c == U'!' || c == U'?'; }

bool IsEllipsisChar(char32_t c) { return c == 0x2026; }

bool IsClosingChar(char32_t c) {
  switch (c) {
    case U'"': case U'\'': case U')': case U']': case U'}':
    case 0x2019: case 0x201D: case 0xBB:
      return true;
    default:
      return false;
  }
}

// Characters that may join two runs of word characters into one token.
bool JoinsWordRuns(const std::u32string& s, size_t j) {
  if (j == 0 || j + 1 >= s.size()) return false;
  const char32_t c = s[j];
  const char32_t prev = s[j - 1];
  const char32_t next = s[j + 1];
  if (!unicode::IsWordChar(prev) || !unicode::IsWordChar(next)) return false;
  switch (c) {
    case U'\'': case 0x2019: case U'-': case U'.':
      return true;
    case U',':
      return unicode::IsDigit(prev) && unicode::IsDigit(next);
    default:
      return false;
  }
}

// "U.S", "e.g", "Ph.D": single letters (or short runs) separated by periods.
bool IsDottedInitialism(std::u32string_view token) {
  if (token.find(U'.') == std::u32string_view::npos) return false;
  size_t run = 0;
  for (char32_t c : token) {
    if (c == U'.') {
      if (run == 0 || run > 2) return false;
      run = 0;
    } else if (unicode::IsUpper(c) || unicode::IsLower(c)) {
      ++run;
    } else {
      return false;
    }
  }
  return run >= 1 && run <= 2;
}

bool IsSingleCapital(std::u32string_view token) {
  return token.size() == 1 && unicode::IsUpper(token[0]);
}

std::vector<Span> WordSpans(const std::u32string& s,
                            const AbbreviationSet& abbreviations) {
  std::vector<Span> spans;
  const size_t n = s.size();
  size_t i = 0;
  while (i < n) {
    const char32_t c = s[i];
    if (unicode::IsSpace(c)) {
      ++i;
      continue;
    }
    // ".5" opens a number when it starts a token.
    const bool leading_decimal = c == U'.' && i + 1 < n && unicode::IsDigit(s[i + 1]) &&
                                 (i == 0 || unicode::IsSpace(s[i - 1]));
    if (unicode::IsWordChar(c) || leading_decimal) {
      size_t j = i + 1;
      while (j < n && (unicode::IsWordChar(s[j]) || JoinsWordRuns(s, j))) ++j;
      // A trailing period stays attached for abbreviations and initials,
      // but never when it starts an ellipsis.
      if (j < n && s[j] == U'.' && !(j + 1 < n && s[j + 1] == U'.')) {
        const std::u32string_view body(s.data() + i, j - i);
        const std::string with_period =
            unicode::Encode(body) + ".";
        if (IsSingleCapital(body) || IsDottedInitialism(body) ||
            abbreviations.Contains(with_period)) {
          ++j;
        }
      }
      spans.push_back({i, j});
      i = j;
      continue;
    }
    size_t j = i + 1;
    if (IsTerminatorChar(c)) {
      while (j < n && IsTerminatorChar(s[j])) ++j;
    } else if (c == U'-') {
      while (j < n && s[j] == U'-') ++j;
    }
    spans.push_back({i, j});
    i = j;
  }
  return spans;
}

std::vector<std::pair<size_t, size_t>> ToPairs(const std::vector<Span>& spans) {
  std::vector<std::pair<size_t, size_t>> out;
  out.reserve(spans.size());
  for (const Span& s : spans) out.emplace_back(s.start, s.end);
  return out;
}

enum class TokenClass { kTerminator, kEllipsis, kInitial, kOther };

TokenClass Classify(std::u32string_view token) {
  if (std::all_of(token.begin(), token.end(), IsTerminatorChar)) {
    const bool periods_only =
        std::all_of(token.begin(), token.end(), [](char32_t c) { return c == U'.'; });
    return (periods_only && token.size() >= 2) ? TokenClass::kEllipsis
                                                : TokenClass::kTerminator;
  }
  if (token.size() == 1 && IsEllipsisChar(token[0])) return TokenClass::kEllipsis;
  if (token.size() == 2 && unicode::IsUpper(token[0]) && token[1] == U'.') {
    return TokenClass::kInitial;
  }
  return TokenClass::kOther;
}

bool StartsUpper(std::u32string_view token) {
  return !token.empty() && unicode::IsUpper(token[0]);
}

}  // namespace

std::string_view SegmentKindName(SegmentKind kind) {
  switch (kind) {
    case SegmentKind::kWord: return "word";
    case SegmentKind::kSentence: return "sentence";
    case SegmentKind::kParagraph: return "paragraph";
  }
  return "word";
}

SegmentKind ParseSegmentKind(std::string_view name) {
  if (name == "word") return SegmentKind::kWord;
  if (name == "sentence") return SegmentKind::kSentence;
  if (name == "paragraph") return SegmentKind::kParagraph;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown granularity '" + std::string(name) + "'");
}

Document::Document(std::string text, SegmentKind granularity,
                   std::vector<Segment> segments)
    : text_(std::move(text)),
      granularity_(granularity),
      segments_(std::move(segments)) {
  size_t prev_end = 0;
  for (size_t i = 0; i < segments_.size(); ++i) {
    const Segment& s = segments_[i];
    if (s.index != i || s.char_start >= s.char_end ||
        s.byte_start >= s.byte_end || s.byte_end > text_.size() ||
        (i > 0 && s.byte_start < prev_end) || s.kind != granularity_) {
      throw Error(ErrorCode::kInvalidArgument,
                  "segment " + std::to_string(i) + " violates document invariants");
    }
    prev_end = s.byte_end;
  }
}

Document Document::FromCharRanges(
    std::string text, SegmentKind granularity,
    std::span<const std::pair<size_t, size_t>> ranges) {
  const DecodedText decoded = unicode::Decode(text);
  std::vector<Segment> segments;
  segments.reserve(ranges.size());
  for (const auto& [start, end] : ranges) {
    if (end > decoded.size() || start >= end) {
      throw Error(ErrorCode::kInvalidArgument, "segment range out of bounds");
    }
    segments.push_back(Segment{segments.size(), start, end,
                               decoded.byte_offsets[start],
                               decoded.byte_offsets[end], granularity});
  }
  return Document(std::move(text), granularity, std::move(segments));
}

std::string_view Document::SegmentText(size_t i) const {
  const Segment& s = segments_.at(i);
  return std::string_view(text_).substr(s.byte_start, s.byte_end - s.byte_start);
}

std::string_view Document::Gap(size_t i) const {
  if (i > segments_.size()) {
    throw Error(ErrorCode::kInvalidArgument, "gap index out of range");
  }
  const size_t begin = i == 0 ? 0 : segments_[i - 1].byte_end;
  const size_t end = i == segments_.size() ? text_.size() : segments_[i].byte_start;
  return std::string_view(text_).substr(begin, end - begin);
}

AbbreviationSet AbbreviationSet::Parse(std::string_view contents) {
  AbbreviationSet set;
  std::istringstream in{std::string(contents)};
  std::string line;
  while (std::getline(in, line)) {
    const std::string entry = unicode::Trim(line);
    if (entry.empty() || entry[0] == '#') continue;
    set.entries_.insert(unicode::AsciiLower(entry));
  }
  return set;
}

AbbreviationSet AbbreviationSet::FromFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot read abbreviation file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return Parse(buf.str());
}

std::shared_ptr<const AbbreviationSet> AbbreviationSet::Bundled() {
  static const auto bundled = std::make_shared<const AbbreviationSet>(
      Parse(internal::kBundledAbbreviations));
  return bundled;
}

bool AbbreviationSet::Contains(std::string_view token_with_period) const {
  return entries_.contains(unicode::AsciiLower(token_with_period));
}

Document SplitWords(std::string_view text) {
  const DecodedText decoded = unicode::Decode(text);
  const auto spans = WordSpans(decoded.chars, *AbbreviationSet::Bundled());
  const auto pairs = ToPairs(spans);
  return Document::FromCharRanges(std::string(text), SegmentKind::kWord, pairs);
}

Document SplitSentences(std::string_view text,
                        const AbbreviationSet& abbreviations) {
  const DecodedText decoded = unicode::Decode(text);
  const std::u32string& s = decoded.chars;
  const std::vector<Span> tokens = WordSpans(s, abbreviations);
  auto token_view = [&](size_t k) {
    return std::u32string_view(s.data() + tokens[k].start,
                               tokens[k].end - tokens[k].start);
  };

  // An initial ends a sentence unless it leads, possibly through further
  // initials, into a capitalized word ("J. K. Rowling").
  std::vector<bool> initial_continues(tokens.size(), false);
  for (size_t k = tokens.size(); k-- > 0;) {
    if (Classify(token_view(k)) != TokenClass::kInitial || k + 1 >= tokens.size()) {
      continue;
    }
    const auto next = token_view(k + 1);
    const TokenClass next_class = Classify(next);
    if (next_class == TokenClass::kInitial) {
      initial_continues[k] = initial_continues[k + 1];
    } else if (next_class == TokenClass::kOther && StartsUpper(next) &&
               next.size() >= 2) {
      initial_continues[k] = true;
    }
  }

  std::vector<std::pair<size_t, size_t>> sentences;
  size_t first = 0;
  for (size_t k = 0; k < tokens.size(); ++k) {
    const TokenClass cls = Classify(token_view(k));
    bool candidate = false;
    switch (cls) {
      case TokenClass::kTerminator:
        candidate = true;
        break;
      case TokenClass::kEllipsis:
        candidate = k + 1 >= tokens.size() || StartsUpper(token_view(k + 1));
        break;
      case TokenClass::kInitial:
        candidate = !initial_continues[k];
        break;
      case TokenClass::kOther:
        break;
    }
    if (!candidate) continue;
    size_t last = k;
    while (last + 1 < tokens.size() && tokens[last + 1].start == tokens[last].end &&
           token_view(last + 1).size() == 1 && IsClosingChar(token_view(last + 1)[0])) {
      ++last;
    }
    const bool at_end = last + 1 >= tokens.size();
    if (!at_end && tokens[last + 1].start == tokens[last].end) continue;
    sentences.emplace_back(tokens[first].start, tokens[last].end);
    first = last + 1;
    k = last;
  }
  if (first < tokens.size()) {
    sentences.emplace_back(tokens[first].start, tokens.back().end);
  }
  return Document::FromCharRanges(std::string(text), SegmentKind::kSentence,
                                  sentences);
}

Document SplitParagraphs(std::string_view text) {
  const DecodedText decoded = unicode::Decode(text);
  const std::u32string& s = decoded.chars;
  std::vector<std::pair<size_t, size_t>> paragraphs;

  // Walk line by line; blank lines separate paragraphs.
  size_t para_start = 0;
  size_t para_end = 0;
  bool in_para = false;
  size_t line_start = 0;
  while (line_start <= s.size()) {
    size_t line_end = s.find(U'\n', line_start);
    if (line_end == std::u32string::npos) line_end = s.size();
    size_t b = line_start;
    size_t e = line_end;
    while (b < e && unicode::IsSpace(s[b])) ++b;
    while (e > b && unicode::IsSpace(s[e - 1])) --e;
    if (b == e) {
      if (in_para) paragraphs.emplace_back(para_start, para_end);
      in_para = false;
    } else {
      if (!in_para) para_start = b;
      para_end = e;
      in_para = true;
    }
    if (line_end == s.size()) break;
    line_start = line_end + 1;
  }
  if (in_para) paragraphs.emplace_back(para_start, para_end);
  return Document::FromCharRanges(std::string(text), SegmentKind::kParagraph,
                                  paragraphs);
}

namespace {

class WordSegmenter final : public Segmenter {
 public:
  Document Split(std::string_view text) const override { return SplitWords(text); }
  SegmentKind kind() const override { return SegmentKind::kWord; }
};

class SentenceSegmenter final : public Segmenter {
 public:
  explicit SentenceSegmenter(std::shared_ptr<const AbbreviationSet> abbreviations)
      : abbreviations_(std::move(abbreviations)) {}
  Document Split(std::string_view text) const override {
    return SplitSentences(text, *abbreviations_);
  }
  SegmentKind kind() const override { return SegmentKind::kSentence; }

 private:
  std::shared_ptr<const AbbreviationSet> abbreviations_;
};

class ParagraphSegmenter final : public Segmenter {
 public:
  Document Split(std::string_view text) const override {
    return SplitParagraphs(text);
  }
  SegmentKind kind() const override { return SegmentKind::kParagraph; }
};

}  // namespace

SegmenterRegistry SegmenterRegistry::Default(
    std::shared_ptr<const AbbreviationSet> abbreviations) {
  SegmenterRegistry registry;
  registry.Register("word", std::make_shared<WordSegmenter>());
  registry.Register("sentence",
                    std::make_shared<SentenceSegmenter>(std::move(abbreviations)));
  registry.Register("paragraph", std::make_shared<ParagraphSegmenter>());
  return registry;
}

void SegmenterRegistry::Register(const std::string& name,
                                 std::shared_ptr<const Segmenter> s) {
  if (name.empty() || !s) {
    throw Error(ErrorCode::kInvalidArgument, "segmenter needs a name and an implementation");
  }
  segmenters_[name] = std::move(s);
}

const Segmenter& SegmenterRegistry::Get(std::string_view name) const {
  const auto it = segmenters_.find(name);
  if (it == segmenters_.end()) {
    throw Error(ErrorCode::kUnknownSegmenter,
                "no segmenter registered as '" + std::string(name) + "'");
  }
  return *it->second;
}

bool SegmenterRegistry::Contains(std::string_view name) const {
  return segmenters_.find(name) != segmenters_.end();
}

std::vector<std::string> SegmenterRegistry::Names() const {
  std::vector<std::string> names;
  for (const auto& [name, _] : segmenters_) names.push_back(name);
  return names;
}

std::vector<std::vector<size_t>> AlignWords(const Document& words,
                                            const Document& coarse) {
  if (words.text() != coarse.text()) {
    throw Error(ErrorCode::kAlignmentError,
                "word and unit documents were built from different texts");
  }
  std::vector<std::vector<size_t>> members(coarse.size());
  size_t unit = 0;
  for (const Segment& w : words.segments()) {
    while (unit < coarse.size() && coarse.segment(unit).char_end <= w.char_start) {
      ++unit;
    }
    if (unit == coarse.size() || w.char_start < coarse.segment(unit).char_start ||
        w.char_end > coarse.segment(unit).char_end) {
      throw Error(ErrorCode::kAlignmentError,
                  "word token " + std::to_string(w.index) +
                      " does not lie inside exactly one unit");
    }
    members[unit].push_back(w.index);
  }
  return members;
}

}  // namespace gutek
