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

#ifndef KGLF_KG_STORE_H_
#define KGLF_KG_STORE_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "kglf/ids.h"
#include "kglf/value.h"

namespace kglf {

struct GraphStats {
  size_t entities = 0;  // nodes that are not classes
  size_t classes = 0;
  size_t properties = 0;  // distinct non-membership properties in triples
  size_t entity_triples = 0;
  size_t value_triples = 0;
  size_t membership_edges = 0;
};

struct PropertyLabel {
  std::string name;
  std::vector<std::string> aliases;
};

// Immutable in-memory Wikidata-style graph.
//
// Entity-to-entity triples are indexed forward (subject, property) and
// backward (object, property); literal triples are indexed by (subject,
// property). Triples whose property is the membership property only
// populate the class indexes. Every list keeps first-seen file order with
// duplicates removed. Lookups on unknown keys return empty spans; returned
// spans live as long as the graph.
class KnowledgeGraph {
 public:
  class Builder;

  // Reads the JSON Lines triples and labels files. Malformed lines throw
  // LoadError; labels for unknown ids are skipped and reported through
  // `warnings` when given.
  static KnowledgeGraph Load(const std::string &triples_path,
                             const std::string &labels_path,
                             PropertyId membership_property,
                             std::vector<std::string> *warnings = nullptr);

  PropertyId membership_property() const { return membership_; }

  std::span<const EntityId> Forward(EntityId e, PropertyId p) const;
  std::span<const EntityId> Backward(EntityId e, PropertyId p) const;
  std::span<const Value> ValuesOf(EntityId e, PropertyId p) const;
  std::span<const ClassId> ClassesOf(EntityId e) const;
  std::span<const EntityId> MembersOf(ClassId c) const;

  // Exact match against normalized names and aliases (see NormalizeName).
  std::span<const EntityId> LookupName(std::string_view normalized) const;

  // Properties p with non-empty Forward(e, p), Backward(e, p) and
  // ValuesOf(e, p) respectively, in ascending id order.
  std::span<const PropertyId> OutProperties(EntityId e) const;
  std::span<const PropertyId> InProperties(EntityId e) const;
  std::span<const PropertyId> ValueProperties(EntityId e) const;

  bool Contains(EntityId e) const { return node_index_.contains(e.value); }
  bool IsClass(EntityId e) const;

  // Non-class entities and classes, in first-seen order.
  const std::vector<EntityId> &entities() const { return entities_; }
  const std::vector<ClassId> &classes() const { return classes_; }
  // Non-membership properties used by at least one triple, ascending.
  const std::vector<PropertyId> &properties() const { return properties_; }

  // Display name; falls back to the external id when unlabeled.
  std::string Name(EntityId e) const;
  std::string Name(ClassId c) const { return Name(c.entity()); }
  std::string PropertyName(PropertyId p) const;
  std::span<const std::string> PropertyAliases(PropertyId p) const;

  // Longest label or alias, in normalized words.
  size_t max_label_words() const { return max_label_words_; }

  const GraphStats &stats() const { return stats_; }

  // Checks that forward/backward and classes/members are exact transposes.
  bool VerifyIndexes() const;

 private:
  // Per-node property-grouped lists in CSR form.
  template <typename T>
  struct GroupedIndex {
    std::vector<uint32_t> node_offsets;  // size = nodes + 1, into groups
    std::vector<PropertyId> group_props;
    std::vector<uint32_t> group_offsets;  // size = groups + 1, into items
    std::vector<T> items;

    std::span<const T> Find(uint32_t node, PropertyId p) const;
    std::span<const PropertyId> Props(uint32_t node) const;
  };

  template <typename T>
  struct FlatIndex {
    std::vector<uint32_t> offsets;
    std::vector<T> items;

    std::span<const T> At(uint32_t node) const;
  };

  const uint32_t *NodeIndex(EntityId e) const;

  PropertyId membership_;
  std::unordered_map<uint64_t, uint32_t> node_index_;
  std::vector<EntityId> nodes_;
  std::vector<bool> is_class_;
  std::vector<EntityId> entities_;
  std::vector<ClassId> classes_;
  std::vector<PropertyId> properties_;

  GroupedIndex<EntityId> forward_;
  GroupedIndex<EntityId> backward_;
  GroupedIndex<Value> values_;
  FlatIndex<ClassId> classes_of_;
  FlatIndex<EntityId> members_of_;

  std::vector<std::string> names_;  // per node, empty when unlabeled
  std::unordered_map<std::string, std::vector<EntityId>> label_index_;
  std::unordered_map<uint64_t, PropertyLabel> property_labels_;
  size_t max_label_words_ = 0;
  GraphStats stats_;
};

// Incremental construction, used by the file loader and by tests that
// synthesize graphs in memory.
class KnowledgeGraph::Builder {
 public:
  explicit Builder(PropertyId membership_property);

  void AddEntityTriple(EntityId s, PropertyId p, EntityId o);
  void AddValueTriple(EntityId s, PropertyId p, Value v);
  void AddEntityLabel(EntityId id, std::string name,
                      std::vector<std::string> aliases = {});
  void AddPropertyLabel(PropertyId id, std::string name,
                        std::vector<std::string> aliases = {});

  KnowledgeGraph Build(std::vector<std::string> *warnings = nullptr) &&;

 private:
  struct EntityTriple {
    uint32_t s;
    PropertyId p;
    uint32_t o;
  };
  struct ValueTriple {
    uint32_t s;
    PropertyId p;
    Value v;
  };
  struct EntityLabelRecord {
    EntityId id;
    std::string name;
    std::vector<std::string> aliases;
  };
  struct PropertyLabelRecord {
    PropertyId id;
    std::string name;
    std::vector<std::string> aliases;
  };
  struct TripleKey {
    uint32_t s;
    uint64_t p;
    uint32_t o;
    bool operator==(const TripleKey &) const = default;
  };
  struct TripleKeyHash {
    size_t operator()(const TripleKey &k) const noexcept;
  };
  struct ValueKey {
    uint32_t s;
    uint64_t p;
    Value v;
    bool operator==(const ValueKey &) const = default;
  };
  struct ValueKeyHash {
    size_t operator()(const ValueKey &k) const noexcept;
  };

  uint32_t Intern(EntityId e);

  PropertyId membership_;
  std::unordered_map<uint64_t, uint32_t> node_index_;
  std::vector<EntityId> nodes_;
  std::vector<EntityTriple> entity_triples_;
  std::vector<EntityTriple> membership_triples_;  // p unused
  std::vector<ValueTriple> value_triples_;
  std::unordered_set<TripleKey, TripleKeyHash> seen_triples_;
  std::unordered_set<ValueKey, ValueKeyHash> seen_values_;
  std::vector<EntityLabelRecord> entity_labels_;
  std::vector<PropertyLabelRecord> property_labels_;
};

}  // namespace kglf

#endif  // KGLF_KG_STORE_H_
