// Copyright 2026 The KGLF Authors.
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

#include <gtest/gtest.h>

#include <fstream>

#include "fixtures.h"
#include "kglf/errors.h"
#include "kglf/json_io.h"
#include "kglf/lf_text.h"

namespace kglf {
namespace {

TEST(JsonIoTest, AnswerRoundTrip) {
  std::vector<AnswerSpec> answers = {
      AnswerSpec::Entities({EntityId{1}, EntityId{2}}),
      AnswerSpec::Entities({}),
      AnswerSpec::OfValue(Value::OfBoolean(true)),
      AnswerSpec::OfValue(Value::OfQuantity(3)),
      AnswerSpec::OfValue(Value::OfQuantity(-2.5)),
      AnswerSpec::OfValue(Value::OfDate({1867, 11, 7})),
      AnswerSpec::OfValue(Value::OfString("Maria \"Salomea\"")),
  };
  for (const AnswerSpec &a : answers) {
    Json j = AnswerToJson(a);
    EXPECT_EQ(AnswerFromJson(Json::parse(j.dump())), a) << j.dump();
  }
  EXPECT_EQ(AnswerToJson(answers[3]).dump(), R"({"k":"quantity","v":3})");
  EXPECT_EQ(AnswerToJson(answers[5]).dump(), R"({"k":"date","v":"1867-11-07"})");
  EXPECT_THROW(AnswerFromJson(Json::parse(R"({"k":"date","v":"1867-13-07"})")), ParseError);
  EXPECT_THROW(AnswerFromJson(Json::parse(R"({"k":"colour","v":1})")), ParseError);
  EXPECT_THROW(AnswerFromJson(Json::parse(R"({"k":"entities","v":["X1"]})")), ParseError);
}

TEST(JsonIoTest, TokensRoundTrip) {
  LogicalForm lf = ParseLfText("equals(get_value(Q1, P569), 1867-11-07)");
  TokenList t = Linearize(lf);
  Json j = TokensToJson(t);
  EXPECT_EQ(j[0].dump(), R"({"t":"g","v":"equals"})");
  EXPECT_EQ(TokensFromJson(j), t);
  EXPECT_THROW(TokensFromJson(Json::parse(R"([{"t":"z","v":"x"}])")), ParseError);
  EXPECT_THROW(TokensFromJson(Json::parse(R"({"t":"g"})")), ParseError);
}

TEST(JsonIoTest, EvalResultShapes) {
  EXPECT_EQ(EvalResultToJson(EntitySet{{EntityId{10}}}).dump(), R"({"k":"entities","v":["Q10"]})");
  EXPECT_EQ(EvalResultToJson(SingleValue{Value::OfBoolean(false)}).dump(),
            R"({"k":"boolean","v":false})");
  EXPECT_EQ(EvalResultToJson(Clarification{}).dump(), R"({"k":"clarification"})");
  Json par = EvalResultToJson(ParallelMap{{EntityId{10}}, {SingleValue{Value::OfQuantity(3)}}});
  EXPECT_EQ(par["k"], "parallel");
}

TEST(JsonIoTest, AnnotationRoundTrip) {
  Annotation a{Value::OfDate({1867, 11, 7}), TextSpan{3, 13}, AnnotationSource::kGold};
  Json j = AnnotationToJson(a);
  EXPECT_EQ(j.dump(), R"({"k":"v","v":"d:1867-11-07","span":[3,13]})");
  EXPECT_EQ(AnnotationFromJson(j, AnnotationSource::kGold), a);
  Annotation c{ClassId{903}, std::nullopt, AnnotationSource::kGold};
  EXPECT_EQ(AnnotationFromJson(AnnotationToJson(c), AnnotationSource::kGold), c);
}

TEST(JsonIoTest, LoadsDatasets) {
  auto micro = LoadDataset(testing::DataPath("micro_dataset.jsonl"));
  ASSERT_EQ(micro.size(), 4u);
  EXPECT_EQ(micro[0].id, "micro-1");
  EXPECT_EQ(micro[0].turns[0].question, "who is the mother of irène");
  EXPECT_EQ(micro[0].turns[0].question_type, "Simple");
  EXPECT_EQ(micro[2].turns[0].answer, AnswerSpec::OfValue(Value::OfDate({1867, 11, 7})));
  auto hist = LoadDataset(testing::DataPath("history_dataset.jsonl"));
  ASSERT_EQ(hist.size(), 2u);
  EXPECT_EQ(hist[0].seed, EntityId{3});
  EXPECT_EQ(hist[0].turns.size(), 3u);
  for (const Dialog &d : micro) {
    Dialog back = DialogFromJson(Json::parse(DialogToJson(d).dump()));
    EXPECT_EQ(back.id, d.id);
    EXPECT_EQ(back.turns[0].answer, d.turns[0].answer);
  }
}

TEST(JsonIoTest, BadDatasetNamesTheLine) {
  std::string dir = testing::MakeTempDir("jsonio");
  std::string path = dir + "/bad.jsonl";
  std::ofstream(path) << R"({"id":"a","turns":[]})" << "\n" << R"({"id":"b","turns":[{"question":1}]})" << "\n";
  try {
    LoadDataset(path);
    FAIL() << "expected LoadError";
  } catch (const LoadError &e) {
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_THROW(LoadDataset(dir + "/missing.jsonl"), LoadError);
}

TEST(JsonIoTest, SilverRoundTrip) {
  SilverExample s;
  s.dialog_id = "micro-1";
  s.turn = 0;
  s.question = "who is the mother of irène";
  s.question_type = "Simple";
  s.tokens = Linearize(ParseLfText("follow_property(Q3, P25)"));
  s.answer = AnswerSpec::Entities({EntityId{1}});
  s.f1 = 1;
  s.scores = {1, 1.0 / 6.0, 1, (2 + 1.0 / 6.0) / 3};
  s.depth = 1;
  Json j = SilverToJson(s, 0.5);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"dialog_id", "turn", "question", "tokens", "f1",
                                            "depth", "scores", "answer", "truncated", "type",
                                            "weight"}));
  EXPECT_EQ(j["scores"]["lexical"], 0.1667);
  SilverExample back = SilverFromJson(Json::parse(j.dump()));
  EXPECT_EQ(back.tokens, s.tokens);
  EXPECT_EQ(back.answer, s.answer);
  EXPECT_EQ(back.question_type, s.question_type);
  EXPECT_EQ(back.depth, 1);
}

TEST(JsonIoTest, ExternalAnnotations) {
  std::string dir = testing::MakeTempDir("jsonio");
  std::string path = dir + "/ann.jsonl";
  std::ofstream(path) << R"({"dialog_id":"micro-1","turn":0,"objects":[{"k":"e","v":"Q3"}]})" << "\n";
  ExternalAnnotations ext = LoadAnnotations(path);
  ASSERT_EQ(ext.size(), 1u);
  const auto &anns = ext.at({"micro-1", 0});
  ASSERT_EQ(anns.size(), 1u);
  EXPECT_EQ(anns[0].object, ObjectRef{EntityId{3}});
  EXPECT_EQ(anns[0].source, AnnotationSource::kGold);
}

}  // namespace
}  // namespace kglf
