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

#ifndef KGLF_CONTEXT_BUILDER_H_
#define KGLF_CONTEXT_BUILDER_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kglf/kg_store.h"
#include "kglf/nel.h"
#include "kglf/tokens.h"

namespace kglf {

struct Utterance {
  std::string role;  // "current", "previous_question" or "previous_answer"
  std::string text;
};

struct EntityObject {
  EntityId id;
  std::string name;
  std::vector<ClassId> class_ids;
  AnnotationSource source = AnnotationSource::kCurrent;
};

struct PropertyObject {
  PropertyId id;
  std::string name;
  // Annotated entities on which the property fires forward, backward or
  // towards a literal.
  std::vector<EntityId> entity_ids;
};

struct ClassObject {
  ClassId id;
  std::string name;
};

struct ValueObject {
  Value value;
  AnnotationSource source = AnnotationSource::kCurrent;
};

// Model input: lists of objects whose fields are scalars or lists of
// scalars, so no node sits more than two levels below the root.
struct StructuredInput {
  std::vector<Utterance> utterances;
  std::vector<EntityObject> entities;
  std::vector<PropertyObject> properties;
  std::vector<ClassObject> classes;
  std::vector<ValueObject> values;
};

// Objects follow annotation order; empty previous utterances are omitted.
StructuredInput BuildContext(std::string_view current,
                             std::string_view previous_question,
                             std::string_view previous_answer,
                             std::span<const Annotation> annotations,
                             const KnowledgeGraph &g);

struct RandomizationConfig {
  uint32_t entity_vocabulary = 1000;
  uint32_t value_vocabulary = 100;
};

// Bijection between the entities and values of one input and integers
// drawn from the vocabularies.
class IdMapping {
 public:
  uint64_t seed() const { return seed_; }

  std::optional<uint32_t> Find(EntityId e) const;
  std::optional<uint32_t> Find(const Value &v) const;
  std::optional<EntityId> EntityAt(uint32_t id) const;
  std::optional<Value> ValueAt(uint32_t id) const;

  const std::vector<std::pair<EntityId, uint32_t>> &entities() const {
    return entities_;
  }
  const std::vector<std::pair<Value, uint32_t>> &values() const {
    return values_;
  }

 private:
  friend IdMapping Randomize(const StructuredInput &, uint64_t,
                             const RandomizationConfig &);

  uint64_t seed_ = 0;
  std::vector<std::pair<EntityId, uint32_t>> entities_;
  std::vector<std::pair<Value, uint32_t>> values_;
};

// Draws distinct ids for the entity objects and value objects, in list
// order, from a generator seeded with `seed`. The same input and seed give
// the same mapping on every platform. Properties and classes keep their
// ids. Throws RandomizationOverflow when a vocabulary is too small.
IdMapping Randomize(const StructuredInput &input, uint64_t seed,
                    const RandomizationConfig &config = {});

// Replaces entity and value tokens by their randomized integers. Throws
// Error for objects the mapping does not cover.
TokenList RewriteTokens(std::span<const Token> tokens, const IdMapping &mapping);
// Inverse of RewriteTokens.
TokenList RestoreTokens(std::span<const Token> tokens, const IdMapping &mapping);

// Single-line JSON with keys utterances, entities, properties, classes and
// values, using the randomized ids.
std::string SerializeContext(const StructuredInput &input,
                             const IdMapping &mapping);

}  // namespace kglf

#endif  // KGLF_CONTEXT_BUILDER_H_
