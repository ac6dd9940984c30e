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

#include "gutek/unicode.h"

#include <gtest/gtest.h>

namespace gutek::unicode {
namespace {

TEST(DecodeTest, MultiByteOffsets) {
  const DecodedText d = Decode("a\xC3\xA9\xE2\x80\xA6\xF0\x9F\x98\x80");
  ASSERT_EQ(d.chars.size(), 4u);
  EXPECT_EQ(d.chars[1], U'é');
  EXPECT_EQ(d.chars[2], U'…');
  EXPECT_EQ(d.chars[3], U'\U0001F600');
  EXPECT_EQ(d.byte_offsets, (std::vector<size_t>{0, 1, 3, 6, 10}));
}

TEST(DecodeTest, InvalidBytesBecomeReplacement) {
  const DecodedText d = Decode("a\xFF" "b\xC3");
  ASSERT_EQ(d.chars.size(), 4u);
  EXPECT_EQ(d.chars[1], U'�');
  EXPECT_EQ(d.chars[3], U'�');
  EXPECT_EQ(d.byte_offsets.back(), 4u);
}

TEST(EncodeTest, RoundTrip) {
  const std::string s = "na\xC3\xAFve \xE2\x80\x9Cquote\xE2\x80\x9D \xF0\x9F\x98\x80";
  EXPECT_EQ(Encode(Decode(s).chars), s);
  EXPECT_EQ(Length(s), 15u);
}

TEST(ClassesTest, Basics) {
  EXPECT_TRUE(IsSpace(U' '));
  EXPECT_TRUE(IsSpace(U' '));
  EXPECT_TRUE(IsSpace(U'　'));
  EXPECT_TRUE(IsPunct(U'.'));
  EXPECT_TRUE(IsPunct(U'“'));
  EXPECT_FALSE(IsPunct(U'_'));
  EXPECT_TRUE(IsWordChar(U'é'));
  EXPECT_TRUE(IsUpper(U'É'));
  EXPECT_TRUE(IsLower(U'é'));
  EXPECT_TRUE(IsDigit(U'7'));
  EXPECT_EQ(AsciiLower("Dr.X"), "dr.x");
  EXPECT_EQ(Trim(" \t x y \n"), "x y");
}

}  // namespace
}  // namespace gutek::unicode
