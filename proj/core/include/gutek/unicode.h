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
#include <string>
#include <string_view>
#include <vector>

namespace gutek::unicode {

// UTF-8 text decoded to scalar values, with the byte offset of every scalar.
// byte_offsets has size() + 1 entries; the last one is the input length.
// Invalid byte sequences decode to U+FFFD one byte at a time so offsets stay
// byte-exact.
struct DecodedText {
  std::u32string chars;
  std::vector<size_t> byte_offsets;

  size_t size() const { return chars.size(); }
};

DecodedText Decode(std::string_view utf8);

void AppendUtf8(char32_t c, std::string& out);
std::string Encode(std::u32string_view text);

// Number of scalar values in a UTF-8 string.
size_t Length(std::string_view utf8);

bool IsSpace(char32_t c);
bool IsPunct(char32_t c);
bool IsDigit(char32_t c);
bool IsUpper(char32_t c);
bool IsLower(char32_t c);
inline bool IsWordChar(char32_t c) { return !IsSpace(c) && !IsPunct(c); }

// ASCII-only lowercasing; other scalars pass through unchanged.
char32_t AsciiLower(char32_t c);
std::string AsciiLower(std::string_view s);

// Strips Unicode whitespace from both ends of a UTF-8 string.
std::string Trim(std::string_view utf8);

}  // namespace gutek::unicode
