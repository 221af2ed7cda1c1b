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

#include <filesystem>
#include <fstream>

#include "fixtures.h"
#include "kglf/errors.h"
#include "kglf/kg_store.h"
#include "reference_evaluator.h"

namespace kglf {
namespace {

using testing::MiniKg;

std::vector<EntityId> Ids(std::span<const EntityId> s) { return {s.begin(), s.end()}; }

TEST(KgStoreTest, MiniKgCounts) {
  const GraphStats &s = MiniKg().stats();
  EXPECT_EQ(s.entities, 12u);
  EXPECT_EQ(s.classes, 3u);
  EXPECT_EQ(s.entity_triples, 11u);
  EXPECT_EQ(s.value_triples, 4u);
  EXPECT_EQ(s.membership_edges, 12u);
  EXPECT_TRUE(MiniKg().VerifyIndexes());
}

TEST(KgStoreTest, Lookups) {
  const KnowledgeGraph &g = MiniKg();
  EXPECT_EQ(Ids(g.Forward(EntityId{3}, PropertyId{25})), std::vector<EntityId>{EntityId{1}});
  EXPECT_EQ(Ids(g.Forward(EntityId{1}, PropertyId{27})),
            (std::vector<EntityId>{EntityId{4}, EntityId{5}}));
  EXPECT_EQ(Ids(g.Backward(EntityId{1}, PropertyId{25})), std::vector<EntityId>{EntityId{3}});
  EXPECT_EQ(Ids(g.MembersOf(ClassId{902})),
            (std::vector<EntityId>{EntityId{4}, EntityId{5}}));
  EXPECT_TRUE(g.Forward(EntityId{4}, PropertyId{25}).empty());
  EXPECT_TRUE(g.Forward(EntityId{999}, PropertyId{25}).empty());
  ASSERT_EQ(g.ValuesOf(EntityId{1}, PropertyId{569}).size(), 1u);
  EXPECT_EQ(g.ValuesOf(EntityId{1}, PropertyId{569})[0], Value::OfDate(Date{1867, 11, 7}));
  ASSERT_EQ(g.ClassesOf(EntityId{10}).size(), 1u);
  EXPECT_EQ(g.ClassesOf(EntityId{10})[0], ClassId{903});
  EXPECT_TRUE(g.IsClass(EntityId{901}));
  EXPECT_FALSE(g.IsClass(EntityId{1}));
}

TEST(KgStoreTest, MatchesLinearScansForEveryNodeAndProperty) {
  const KnowledgeGraph &g = MiniKg();
  auto ref = oracle::ReferenceGraph::FromFile(testing::MiniKgTriplesPath());
  std::vector<EntityId> nodes = g.entities();
  for (ClassId c : g.classes()) nodes.push_back(c.entity());
  for (EntityId e : nodes) {
    for (uint64_t p : {25, 26, 27, 1303, 1477, 569, 31, 7}) {
      PropertyId pid{p};
      EXPECT_EQ(Ids(g.Forward(e, pid)), ref.Objects(e, pid));
      EXPECT_EQ(Ids(g.Backward(e, pid)), ref.Subjects(e, pid));
      auto values = g.ValuesOf(e, pid);
      EXPECT_EQ(std::vector<Value>(values.begin(), values.end()), ref.Literals(e, pid));
    }
    auto classes = g.ClassesOf(e);
    EXPECT_EQ(std::vector<ClassId>(classes.begin(), classes.end()), ref.ClassesOf(e));
  }
}

TEST(KgStoreTest, AdjacentPropertyLists) {
  const KnowledgeGraph &g = MiniKg();
  auto out = g.OutProperties(EntityId{1});
  EXPECT_EQ(std::vector<PropertyId>(out.begin(), out.end()),
            (std::vector<PropertyId>{PropertyId{26}, PropertyId{27}}));
  auto in = g.InProperties(EntityId{1});
  EXPECT_EQ(std::vector<PropertyId>(in.begin(), in.end()),
            (std::vector<PropertyId>{PropertyId{25}, PropertyId{26}}));
  auto vals = g.ValueProperties(EntityId{1});
  EXPECT_EQ(std::vector<PropertyId>(vals.begin(), vals.end()),
            (std::vector<PropertyId>{PropertyId{569}, PropertyId{1477}}));
}

TEST(KgStoreTest, NameLookupIsNormalized) {
  const KnowledgeGraph &g = MiniKg();
  EXPECT_EQ(Ids(g.LookupName("irène")), std::vector<EntityId>{EntityId{3}});
  EXPECT_EQ(Ids(g.LookupName("curie")),
            (std::vector<EntityId>{EntityId{1}, EntityId{2}}));
  EXPECT_TRUE(g.LookupName("Curie").empty());  // callers normalize first
  EXPECT_EQ(g.Name(EntityId{3}), "Irène Joliot-Curie");
  EXPECT_EQ(g.PropertyName(PropertyId{27}), "country of citizenship");
  EXPECT_EQ(g.PropertyName(PropertyId{12345}), "P12345");
  EXPECT_EQ(g.PropertyAliases(PropertyId{26}).size(), 2u);
}

TEST(KgStoreTest, DuplicateTriplesCollapse) {
  KnowledgeGraph::Builder b(PropertyId{31});
  b.AddEntityTriple(EntityId{1}, PropertyId{2}, EntityId{3});
  b.AddEntityTriple(EntityId{1}, PropertyId{2}, EntityId{3});
  b.AddValueTriple(EntityId{1}, PropertyId{4}, Value::OfQuantity(1));
  b.AddValueTriple(EntityId{1}, PropertyId{4}, Value::OfQuantity(1));
  KnowledgeGraph g = std::move(b).Build();
  EXPECT_EQ(g.stats().entity_triples, 1u);
  EXPECT_EQ(g.stats().value_triples, 1u);
}

TEST(KgStoreTest, DanglingLabelsWarn) {
  KnowledgeGraph::Builder b(PropertyId{31});
  b.AddEntityTriple(EntityId{1}, PropertyId{2}, EntityId{3});
  b.AddEntityLabel(EntityId{77}, "ghost");
  std::vector<std::string> warnings;
  KnowledgeGraph g = std::move(b).Build(&warnings);
  ASSERT_EQ(warnings.size(), 1u);
  EXPECT_NE(warnings[0].find("Q77"), std::string::npos);
}

TEST(KgStoreTest, CorruptLineIsReported) {
  try {
    KnowledgeGraph::Load(testing::DataPath("corrupt_line7_triples.jsonl"),
                         testing::MiniKgLabelsPath(), PropertyId{31});
    FAIL() << "expected LoadError";
  } catch (const LoadError &e) {
    EXPECT_EQ(e.line(), 7u);
  }
}

TEST(KgStoreTest, MissingFileIsReported) {
  EXPECT_THROW(KnowledgeGraph::Load("/nonexistent/triples.jsonl",
                                    testing::MiniKgLabelsPath(), PropertyId{31}),
               LoadError);
}

TEST(KgStoreTest, RejectsUnknownValueKind) {
  std::string dir = testing::MakeTempDir("kglf-store");
  std::string path = dir + "/t.jsonl";
  std::ofstream(path) << "{\"s\":\"Q1\",\"p\":\"P1\",\"o\":{\"k\":\"z\",\"v\":\"1\"}}\n";
  EXPECT_THROW(KnowledgeGraph::Load(path, testing::MiniKgLabelsPath(), PropertyId{31}),
               LoadError);
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace kglf
