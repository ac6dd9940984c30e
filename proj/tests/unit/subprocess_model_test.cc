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

#include "gutek/subprocess_model.h"

#include <gtest/gtest.h>

#include "gutek/error.h"
#include "gutek/model_handle.h"
#include "gutek/random.h"

namespace gutek {
namespace {

std::string Stub(const std::string& flags = "") {
  return std::string("'") + GUTEK_STUB_ADAPTER + "' " + flags;
}

// Mirror of the stub's scoring rule.
double StubPositive(const std::string& text) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return 0.05 + 0.9 * static_cast<double>(h % 10007) / 10006.0;
}

ErrorCode CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kInvalidArgument;
}

const std::vector<std::string> kTexts = {"good film", "bad film"};

TEST(SubprocessModelTest, HandshakeAndPredict) {
  SubprocessModel model(Stub("--model-id stub-x"));
  EXPECT_EQ(model.info().model_id, "stub-x");
  EXPECT_EQ(model.info().labels, (std::vector<std::string>{"neg", "pos"}));
  EXPECT_TRUE(model.info().can_embed);
  const auto out = model.Predict(kTexts);
  ASSERT_EQ(out.size(), 2u);
  EXPECT_DOUBLE_EQ((*out[0].value)[1], StubPositive("good film"));
  const auto vec = model.Embed(kTexts);
  EXPECT_EQ(vec[0].value->size(), 8u);
  EXPECT_EQ(model.requests_sent(), 2u);
}

TEST(SubprocessModelTest, NoEmbedCapability) {
  SubprocessModel model(Stub("--no-embed"));
  EXPECT_FALSE(model.info().can_embed);
  EXPECT_EQ(CodeOf([&] { model.Embed(kTexts); }), ErrorCode::kUnsupportedCapability);
}

TEST(SubprocessModelTest, StartupFailures) {
  EXPECT_EQ(CodeOf([] { SubprocessModel m(Stub("--bad-handshake")); }),
            ErrorCode::kProtocolError);
  EXPECT_EQ(CodeOf([] { SubprocessModel m("false"); }), ErrorCode::kModelUnavailable);
  EXPECT_EQ(CodeOf([] { SubprocessModel m("/nonexistent/adapter"); }),
            ErrorCode::kModelUnavailable);
  SubprocessOptions quick;
  quick.handshake_timeout = std::chrono::milliseconds(300);
  EXPECT_EQ(CodeOf([&] { SubprocessModel m(Stub("--silent"), quick); }),
            ErrorCode::kModelUnavailable);
}

TEST(SubprocessModelTest, CrashMakesClientUnusable) {
  SubprocessModel model(Stub("--crash-after 1"));
  EXPECT_TRUE(model.Predict(kTexts)[0].ok());
  EXPECT_EQ(CodeOf([&] { model.Predict(kTexts); }), ErrorCode::kModelUnavailable);
  EXPECT_EQ(CodeOf([&] { model.Predict(kTexts); }), ErrorCode::kModelUnavailable);
}

TEST(SubprocessModelTest, MalformedAndMismatchedResponses) {
  for (const std::string flag : {"--malformed-after 0", "--wrong-id-after 0",
                                 "--wrong-rows-after 0"}) {
    SCOPED_TRACE(flag);
    SubprocessModel model(Stub(flag));
    EXPECT_EQ(CodeOf([&] { model.Predict(kTexts); }), ErrorCode::kProtocolError);
    EXPECT_EQ(CodeOf([&] { model.Predict(kTexts); }), ErrorCode::kModelUnavailable);
  }
}

TEST(SubprocessModelTest, Timeout) {
  SubprocessOptions quick;
  quick.request_timeout = std::chrono::milliseconds(300);
  SubprocessModel model(Stub("--sleep-after 0"), quick);
  EXPECT_EQ(CodeOf([&] { model.Predict(kTexts); }), ErrorCode::kModelUnavailable);
}

TEST(SubprocessModelTest, ErrorResponseFailsEveryItem) {
  SubprocessModel model(Stub("--error-after 0"));
  const auto out = model.Predict(kTexts);
  EXPECT_FALSE(out[0].ok());
  EXPECT_EQ(out[1].error, "scripted failure");
  EXPECT_TRUE(model.Predict(kTexts)[0].ok());
}

TEST(SubprocessModelTest, PerItemFailureThroughHandle) {
  ModelHandle handle(std::make_shared<SubprocessModel>(Stub("--fail-text poison")));
  const std::vector<std::string> texts = {"fine", "poison pill", "also fine"};
  const auto out = handle.PredictBatch(texts);
  EXPECT_TRUE(out[0].ok());
  EXPECT_EQ(out[1].error, "cannot score this text");
  EXPECT_TRUE(out[2].ok());
}

TEST(SubprocessModelTest, InvalidProbabilitiesRejectedByHandle) {
  ModelHandle handle(std::make_shared<SubprocessModel>(Stub("--bad-probs-after 0")));
  const auto out = handle.PredictBatch(kTexts);
  EXPECT_FALSE(out[0].ok());
  EXPECT_NE(out[0].error.find("BadResponse"), std::string::npos);
}

TEST(SubprocessModelTest, ThousandRandomRequestsStayInSync) {
  SubprocessModel model(Stub());
  Rng rng(2024);
  size_t mismatches = 0;
  for (int i = 0; i < 1000; ++i) {
    std::vector<std::string> texts;
    for (size_t k = 0, n = rng.UniformInt(6) + 1; k < n; ++k) {
      std::string t;
      for (size_t c = 0, len = rng.UniformInt(30); c < len; ++c) {
        static const char* pieces[] = {"a", "b", " ", "\"", "\\", "\n", "\xC3\xA9", "."};
        t += pieces[rng.UniformInt(8)];
      }
      texts.push_back(t);
    }
    const bool embed = rng.UniformInt(4) == 0;
    const auto out = embed ? model.Embed(texts) : model.Predict(texts);
    if (out.size() != texts.size()) {
      ++mismatches;
      continue;
    }
    for (size_t k = 0; k < texts.size(); ++k) {
      if (!out[k].ok()) {
        ++mismatches;
      } else if (!embed && (*out[k].value)[1] != StubPositive(texts[k])) {
        ++mismatches;
      }
    }
  }
  EXPECT_EQ(mismatches, 0u);
  EXPECT_EQ(model.requests_sent(), 1000u);
}

}  // namespace
}  // namespace gutek
