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

#include <algorithm>
#include <chrono>
#include <map>

#include "fixtures.h"
#include "kglf/bfs.h"
#include "kglf/evaluator.h"
#include "kglf/lf_text.h"
#include "kglf/text.h"
#include "kglf/type_check.h"
#include "lf_enumerator.h"

namespace kglf {
namespace {

using testing::MiniKg;

std::vector<Annotation> Annotate(std::initializer_list<ObjectRef> objects) {
  std::vector<Annotation> out;
  for (const ObjectRef &o : objects) out.push_back({o, std::nullopt, AnnotationSource::kGold});
  return out;
}

LogicalForm Parse(const std::string &text) {
  return ParseLfText(text, [](EntityId e) { return MiniKg().IsClass(e); });
}

TEST(BfsTest, FindsTheMotherOfIrene) {
  BfsConfig cfg;
  cfg.max_depth = 3;
  auto anns = Annotate({EntityId{3}});
  GenerationResult r = Generate("who is the mother of irène", anns,
                                AnswerSpec::Entities({EntityId{1}}), MiniKg(), cfg);
  const LogicalForm expected = Parse("follow_property(Q3, P25)");
  auto it = std::find_if(r.candidates.begin(), r.candidates.end(),
                         [&](const Candidate &c) { return c.lf == expected; });
  ASSERT_NE(it, r.candidates.end());
  EXPECT_DOUBLE_EQ(it->f1, 1.0);
  EXPECT_EQ(it->depth, 1);
  auto best = SelectBest(r.candidates);
  ASSERT_TRUE(best);
  EXPECT_EQ(r.candidates[*best].lf, expected);
  EXPECT_DOUBLE_EQ(r.best_f1, 1.0);
}

TEST(BfsTest, EnumerationMatchesBruteForceAtDepthTwo) {
  const std::vector<ObjectRef> seeds = {EntityId{1}, EntityId{3}, ClassId{902}, ClassId{903},
                                        PropertyId{25}, PropertyId{27}, PropertyId{569},
                                        PropertyId{1303}};
  std::vector<Annotation> anns;
  for (const ObjectRef &o : seeds) anns.push_back({o, std::nullopt, AnnotationSource::kGold});
  BfsConfig cfg;
  cfg.max_depth = 2;
  cfg.operators.assign(AllOps().begin(), AllOps().end());
  cfg.forbidden.clear();
  cfg.property_source = PropertySource::kAnnotated;
  cfg.prune_empty = false;
  cfg.prune_dead_ends = false;
  cfg.beam_cap = 1u << 30;

  std::map<std::string, int> seen;
  Generate("", anns, AnswerSpec::Entities({}), MiniKg(), cfg,
           [&](const LogicalForm &lf) { ++seen[lf.ToText()]; });
  std::map<std::string, int> expected;
  for (const LogicalForm &lf : oracle::EnumerateWellTyped(seeds, AllOps(), 2)) {
    ++expected[lf.ToText()];
  }
  EXPECT_EQ(seen.size(), expected.size());
  EXPECT_TRUE(seen == expected);
  for (const auto &[text, n] : expected) {
    if (seen[text] != n) {
      ADD_FAILURE() << text << " enumerated " << seen[text] << " times";
      break;
    }
  }
}

TEST(BfsTest, AdjacentPropertiesFire) {
  BfsConfig cfg;
  cfg.max_depth = 2;
  cfg.prune_empty = false;
  auto anns = Annotate({EntityId{1}, ClassId{903}});
  size_t graph_forms = 0;
  Generate("q", anns, AnswerSpec::Entities({}), MiniKg(), cfg, [&](const LogicalForm &lf) {
    if (lf.is_leaf()) return;
    Op op = lf.op();
    if (op != Op::kFollowProperty && op != Op::kFollowBackward && op != Op::kGetValue) return;
    ++graph_forms;
    // Adjacent properties never produce an empty result from a non-empty set.
    if (!IsEmptyResult(Evaluate(lf.children()[0], MiniKg()))) {
      EXPECT_FALSE(IsEmptyResult(Evaluate(lf, MiniKg()))) << lf.ToText();
    }
  });
  EXPECT_GT(graph_forms, 0u);
}

TEST(BfsTest, DepthOneNeverEmitsDeeperForms) {
  BfsConfig cfg;
  cfg.max_depth = 1;
  cfg.min_f1 = 0;
  auto anns = Annotate({EntityId{1}, EntityId{3}, ClassId{903}});
  int deepest = 0;
  GenerationResult r = Generate("q", anns, AnswerSpec::Entities({EntityId{1}}), MiniKg(), cfg,
                                [&](const LogicalForm &lf) { deepest = std::max(deepest, lf.depth()); });
  EXPECT_EQ(deepest, 1);
  for (const Candidate &c : r.candidates) EXPECT_LE(c.lf.depth(), 1);
}

TEST(BfsTest, ForbiddenPatternsAreNeverBuilt) {
  BfsConfig cfg;
  cfg.max_depth = 3;
  cfg.beam_cap = 1u << 30;
  auto anns = Annotate({EntityId{1}});
  Generate("q", anns, AnswerSpec::Entities({}), MiniKg(), cfg, [&](const LogicalForm &lf) {
    if (lf.is_leaf() || lf.children()[0].is_leaf()) return;
    Op parent = lf.op();
    Op child = lf.children()[0].op();
    EXPECT_FALSE(parent == Op::kFollowBackward && child == Op::kFollowProperty) << lf.ToText();
    EXPECT_FALSE(parent == Op::kFollowProperty && child == Op::kFollowBackward) << lf.ToText();
  });
}

TEST(BfsTest, DeadEndsAndEmptiesArePruned) {
  BfsConfig cfg;
  cfg.max_depth = 2;
  cfg.min_f1 = 0;
  auto anns = Annotate({ClassId{903}});
  GenerationResult r = Generate("q", anns, AnswerSpec::Entities({EntityId{10}}), MiniKg(), cfg,
                                [&](const LogicalForm &lf) {
                                  if (lf.depth() == 2) EXPECT_FALSE(TypeCheck(lf).parallel);
                                });
  for (const Candidate &c : r.candidates) EXPECT_FALSE(IsEmptyResult(c.answer));
}

TEST(BfsTest, BeamCapTruncates) {
  BfsConfig cfg;
  cfg.max_depth = 2;
  cfg.beam_cap = 1;
  auto anns = Annotate({EntityId{1}, EntityId{2}});
  GenerationResult r = Generate("q", anns, AnswerSpec::Entities({EntityId{4}}), MiniKg(), cfg);
  EXPECT_TRUE(r.truncated);
  EXPECT_FALSE(r.timed_out);
}

TEST(BfsTest, TimeoutStopsHubSearch) {
  KnowledgeGraph hub = testing::HubGraph(100000);
  BfsConfig cfg;
  cfg.max_depth = 7;
  cfg.timeout_seconds = 1;
  auto anns = Annotate({EntityId{1}});
  auto start = std::chrono::steady_clock::now();
  GenerationResult r = Generate("hub neighbor", anns, AnswerSpec::Entities({EntityId{100}}), hub, cfg);
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  EXPECT_LT(seconds, 2.0);
  EXPECT_TRUE(r.truncated);
  EXPECT_TRUE(r.timed_out);
}

TEST(BfsTest, Deterministic) {
  BfsConfig cfg;
  cfg.max_depth = 2;
  auto anns = Annotate({EntityId{1}, EntityId{2}});
  AnswerSpec gold = AnswerSpec::Entities({EntityId{5}});
  GenerationResult a = Generate("country of citizenship", anns, gold, MiniKg(), cfg);
  GenerationResult b = Generate("country of citizenship", anns, gold, MiniKg(), cfg);
  ASSERT_EQ(a.candidates.size(), b.candidates.size());
  for (size_t i = 0; i < a.candidates.size(); ++i) {
    EXPECT_EQ(a.candidates[i].lf, b.candidates[i].lf);
  }
  EXPECT_EQ(a.enumerated, b.enumerated);
}

TEST(BfsTest, ValidateRejectsBadConfigs) {
  BfsConfig cfg;
  cfg.max_depth = 0;
  EXPECT_THROW(cfg.Validate(), std::invalid_argument);
  cfg = BfsConfig{};
  cfg.min_f1 = 1.5;
  EXPECT_THROW(cfg.Validate(), std::invalid_argument);
  cfg = BfsConfig{};
  cfg.timeout_seconds = 0;
  EXPECT_THROW(cfg.Validate(), std::invalid_argument);
  cfg = BfsConfig{};
  cfg.forbidden.push_back({Op::kCardinality, Op::kUnion, 1});
  EXPECT_THROW(cfg.Validate(), std::invalid_argument);
  EXPECT_NO_THROW(BfsConfig{}.Validate());
  EXPECT_EQ(DefaultOperators().size(), 20u);
}

TEST(ScoresTest, ComplexityFormula) {
  for (int dmax = 1; dmax <= 7; ++dmax) {
    for (int d = 1; d <= 7; ++d) {
      double expected = dmax == 1 ? 1.0 : 1.0 - double(d - 1) / double(dmax - 1);
      expected = std::clamp(expected, 0.0, 1.0);
      EXPECT_NEAR(ComplexityScore(d, dmax), expected, 1e-12) << d << "/" << dmax;
    }
  }
}

TEST(ScoresTest, JaccardOfMotherQuestion) {
  auto name = NormalizedWords("mother");
  auto question = NormalizedWords("who is the mother of irène");
  EXPECT_EQ(JaccardIndex(name, question), 1.0 / 6.0);
  auto s = ScoreLogicalForm(Parse("follow_property(Q3, P25)"), 3, "who is the mother of irène",
                            Annotate({EntityId{3}}), MiniKg());
  EXPECT_EQ(s.lexical, 1.0 / 6.0);
  EXPECT_EQ(s.complexity, 1.0);
  EXPECT_EQ(s.coverage, 1.0);
  EXPECT_NEAR(s.total, (1.0 + 1.0 / 6.0 + 1.0) / 3.0, 1e-12);
}

TEST(ScoresTest, CoverageCountsAnnotatedEntities) {
  auto anns = Annotate({EntityId{1}, EntityId{2}, ClassId{903}, Value::OfQuantity(3)});
  auto s = ScoreLogicalForm(Parse("follow_property(Q1, P27)"), 3, "q", anns, MiniKg());
  EXPECT_EQ(s.coverage, 0.5);
  auto none = ScoreLogicalForm(Parse("members(Q903)"), 3, "q", Annotate({}), MiniKg());
  EXPECT_EQ(none.coverage, 1.0);
  EXPECT_EQ(none.lexical, 1.0);
}

Candidate MakeCandidate(const std::string &text, double f1, int max_depth) {
  LogicalForm lf = Parse(text);
  Candidate c{lf, Evaluate(lf, MiniKg()), f1, lf.depth(), {}};
  c.scores = ScoreLogicalForm(lf, max_depth, "country", Annotate({EntityId{1}}), MiniKg());
  return c;
}

TEST(SelectBestTest, PrefersShallowerOnEqualF1) {
  // Same lexical and coverage scores; only the depth differs.
  std::vector<Candidate> c = {
      MakeCandidate("get_first(get_first(follow_property(Q1, P27)))", 1.0, 3),
      MakeCandidate("follow_property(Q1, P27)", 1.0, 3),
  };
  EXPECT_EQ(c[0].scores.lexical, c[1].scores.lexical);
  EXPECT_EQ(c[0].scores.coverage, c[1].scores.coverage);
  EXPECT_EQ(SelectBest(c), 1u);
}

TEST(SelectBestTest, F1DominatesScores) {
  std::vector<Candidate> c = {
      MakeCandidate("follow_property(Q1, P27)", 0.5, 3),
      MakeCandidate("get_first(get_first(follow_property(Q1, P27)))", 0.6, 3),
  };
  EXPECT_EQ(SelectBest(c), 1u);
  EXPECT_FALSE(SelectBest({}));
}

TEST(SelectBestTest, TokenOrderBreaksFullTies) {
  std::vector<Candidate> c = {
      MakeCandidate("union(Q1, Q2)", 1.0, 3),
      MakeCandidate("intersect(Q1, Q1)", 1.0, 3),
  };
  c[0].scores = c[1].scores;
  // "intersect" < "union" as token text.
  EXPECT_EQ(SelectBest(c), 1u);
}

TEST(AnswerF1Test, EntitySets) {
  auto gold = AnswerSpec::Entities({EntityId{1}});
  EXPECT_NEAR(AnswerF1(EntitySet{{EntityId{1}, EntityId{2}}}, gold), 2.0 / 3.0, 1e-12);
  EXPECT_EQ(AnswerF1(EntitySet{{EntityId{1}}}, gold), 1.0);
  EXPECT_EQ(AnswerF1(EntitySet{{EntityId{2}}}, gold), 0.0);
  EXPECT_EQ(AnswerF1(EntitySet{}, gold), 0.0);
  EXPECT_EQ(AnswerF1(EntitySet{}, AnswerSpec::Entities({})), 1.0);
  EXPECT_EQ(AnswerF1(ClassSet{{ClassId{903}}}, AnswerSpec::Entities({EntityId{903}})), 1.0);
  EXPECT_EQ(AnswerF1(SingleValue{Value::OfQuantity(1)}, gold), 0.0);
}

TEST(AnswerF1Test, Values) {
  auto three = AnswerSpec::OfValue(Value::OfQuantity(3));
  EXPECT_EQ(AnswerF1(SingleValue{Value::OfQuantity(3)}, three), 1.0);
  EXPECT_EQ(AnswerF1(ValueSet{{Value::OfQuantity(3)}}, three), 1.0);
  EXPECT_EQ(AnswerF1(ValueSet{{Value::OfQuantity(3), Value::OfQuantity(4)}}, three), 0.0);
  EXPECT_EQ(AnswerF1(SingleValue{Value::OfQuantity(2)}, three), 0.0);
  EXPECT_EQ(AnswerF1(EntitySet{{EntityId{3}}}, three), 0.0);
  EXPECT_EQ(AnswerF1(SingleValue{Value::OfString("Polish")},
                     AnswerSpec::OfValue(Value::OfString("polish"))),
            1.0);
}

}  // namespace
}  // namespace kglf
