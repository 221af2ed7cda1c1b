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

#include "kglf/kg_store.h"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <utility>

#include "json.hpp"
#include "kglf/errors.h"
#include "kglf/text.h"

namespace kglf {
namespace {

using json = nlohmann::json;

size_t HashCombine(size_t h, size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

// Builds a node -> property -> items CSR from (node, property, item) records
// given in ingestion order. The sort is stable so per-key order is preserved.
template <typename T, typename Record, typename NodeOf, typename ItemOf>
void BuildGrouped(size_t num_nodes, const std::vector<Record> &records,
                  NodeOf node_of, ItemOf item_of, std::vector<uint32_t> &node_offsets,
                  std::vector<PropertyId> &group_props,
                  std::vector<uint32_t> &group_offsets, std::vector<T> &items) {
  std::vector<uint32_t> order(records.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](uint32_t a, uint32_t b) {
    uint32_t na = node_of(records[a]);
    uint32_t nb = node_of(records[b]);
    if (na != nb) return na < nb;
    return records[a].p < records[b].p;
  });
  node_offsets.assign(num_nodes + 1, 0);
  group_props.clear();
  group_offsets.clear();
  items.clear();
  items.reserve(records.size());
  size_t i = 0;
  for (uint32_t node = 0; node < num_nodes; ++node) {
    node_offsets[node] = static_cast<uint32_t>(group_props.size());
    while (i < order.size() && node_of(records[order[i]]) == node) {
      PropertyId p = records[order[i]].p;
      group_props.push_back(p);
      group_offsets.push_back(static_cast<uint32_t>(items.size()));
      while (i < order.size() && node_of(records[order[i]]) == node &&
             records[order[i]].p == p) {
        items.push_back(item_of(records[order[i]]));
        ++i;
      }
    }
  }
  node_offsets[num_nodes] = static_cast<uint32_t>(group_props.size());
  group_offsets.push_back(static_cast<uint32_t>(items.size()));
}

template <typename T, typename Record, typename NodeOf, typename ItemOf>
void BuildFlat(size_t num_nodes, const std::vector<Record> &records,
               NodeOf node_of, ItemOf item_of, std::vector<uint32_t> &offsets,
               std::vector<T> &items) {
  offsets.assign(num_nodes + 1, 0);
  for (const Record &r : records) ++offsets[node_of(r) + 1];
  for (size_t n = 0; n < num_nodes; ++n) offsets[n + 1] += offsets[n];
  std::vector<uint32_t> cursor(offsets.begin(), offsets.end() - 1);
  items.assign(records.size(), T{});
  for (const Record &r : records) items[cursor[node_of(r)]++] = item_of(r);
}

std::string RequireString(const json &obj, const char *key) {
  auto it = obj.find(key);
  if (it == obj.end() || !it->is_string()) {
    throw std::runtime_error(std::string("missing string field \"") + key +
                             "\"");
  }
  return it->get<std::string>();
}

EntityId RequireEntity(const json &obj, const char *key) {
  std::string text = RequireString(obj, key);
  auto id = ParseEntityId(text);
  if (!id) throw std::runtime_error("bad entity id \"" + text + "\"");
  return *id;
}

Value ParseValueObject(const json &o, const std::string &path, size_t line) {
  std::string tag = RequireString(o, "k");
  auto kind = ValueKindFromTag(tag);
  if (!kind) throw LoadError(path, line, "unknown value kind \"" + tag + "\"");
  auto v = o.find("v");
  if (v == o.end()) throw std::runtime_error("missing value payload");
  switch (*kind) {
    case ValueKind::kDate: {
      if (!v->is_string()) throw std::runtime_error("date must be a string");
      auto d = ParseIsoDate(v->get<std::string>());
      if (!d) {
        throw std::runtime_error("invalid date \"" + v->get<std::string>() +
                                 "\"");
      }
      return Value::OfDate(*d);
    }
    case ValueKind::kBoolean:
      if (v->is_boolean()) return Value::OfBoolean(v->get<bool>());
      if (v->is_string() && (*v == "true" || *v == "false")) {
        return Value::OfBoolean(*v == "true");
      }
      throw std::runtime_error("invalid boolean");
    case ValueKind::kQuantity:
      if (v->is_number()) return Value::OfQuantity(v->get<double>());
      if (v->is_string()) {
        if (auto q = ParseQuantity(v->get<std::string>())) {
          return Value::OfQuantity(*q);
        }
      }
      throw std::runtime_error("invalid quantity");
    case ValueKind::kString:
      if (!v->is_string()) throw std::runtime_error("string must be a string");
      return Value::OfString(v->get<std::string>());
  }
  throw std::runtime_error("unreachable");
}

template <typename Fn>
void ForEachJsonLine(const std::string &path, Fn fn) {
  std::ifstream in(path);
  if (!in) throw LoadError(path, 0, "cannot open file");
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      json obj = json::parse(line);
      if (!obj.is_object()) throw std::runtime_error("expected a JSON object");
      fn(obj, lineno);
    } catch (const LoadError &) {
      throw;
    } catch (const std::exception &e) {
      throw LoadError(path, lineno, e.what());
    }
  }
}

std::vector<std::string> ReadAliases(const json &obj) {
  std::vector<std::string> aliases;
  auto it = obj.find("aliases");
  if (it == obj.end() || it->is_null()) return aliases;
  if (!it->is_array()) throw std::runtime_error("aliases must be an array");
  for (const json &a : *it) {
    if (!a.is_string()) throw std::runtime_error("alias must be a string");
    aliases.push_back(a.get<std::string>());
  }
  return aliases;
}

}  // namespace

// ---------------------------------------------------------------------------
// Builder

size_t KnowledgeGraph::Builder::TripleKeyHash::operator()(
    const TripleKey &k) const noexcept {
  size_t h = std::hash<uint64_t>()(k.s);
  h = HashCombine(h, std::hash<uint64_t>()(k.p));
  return HashCombine(h, std::hash<uint64_t>()(k.o));
}

size_t KnowledgeGraph::Builder::ValueKeyHash::operator()(
    const ValueKey &k) const noexcept {
  size_t h = std::hash<uint64_t>()(k.s);
  h = HashCombine(h, std::hash<uint64_t>()(k.p));
  return HashCombine(h, k.v.Hash());
}

KnowledgeGraph::Builder::Builder(PropertyId membership_property)
    : membership_(membership_property) {}

uint32_t KnowledgeGraph::Builder::Intern(EntityId e) {
  auto [it, inserted] =
      node_index_.emplace(e.value, static_cast<uint32_t>(nodes_.size()));
  if (inserted) nodes_.push_back(e);
  return it->second;
}

void KnowledgeGraph::Builder::AddEntityTriple(EntityId s, PropertyId p,
                                              EntityId o) {
  uint32_t si = Intern(s);
  uint32_t oi = Intern(o);
  if (!seen_triples_.insert(TripleKey{si, p.value, oi}).second) return;
  if (p == membership_) {
    membership_triples_.push_back(EntityTriple{si, p, oi});
  } else {
    entity_triples_.push_back(EntityTriple{si, p, oi});
  }
}

void KnowledgeGraph::Builder::AddValueTriple(EntityId s, PropertyId p,
                                             Value v) {
  uint32_t si = Intern(s);
  if (!seen_values_.insert(ValueKey{si, p.value, v}).second) return;
  value_triples_.push_back(ValueTriple{si, p, std::move(v)});
}

void KnowledgeGraph::Builder::AddEntityLabel(EntityId id, std::string name,
                                             std::vector<std::string> aliases) {
  entity_labels_.push_back({id, std::move(name), std::move(aliases)});
}

void KnowledgeGraph::Builder::AddPropertyLabel(
    PropertyId id, std::string name, std::vector<std::string> aliases) {
  property_labels_.push_back({id, std::move(name), std::move(aliases)});
}

KnowledgeGraph KnowledgeGraph::Builder::Build(
    std::vector<std::string> *warnings) && {
  KnowledgeGraph g;
  g.membership_ = membership_;
  const size_t n = nodes_.size();
  g.node_index_ = std::move(node_index_);
  g.nodes_ = std::move(nodes_);

  g.is_class_.assign(n, false);
  for (const EntityTriple &t : membership_triples_) {
    if (!g.is_class_[t.o]) {
      g.is_class_[t.o] = true;
    }
  }
  // Classes in order of first appearance as a membership object.
  {
    std::vector<bool> listed(n, false);
    for (const EntityTriple &t : membership_triples_) {
      if (!listed[t.o]) {
        listed[t.o] = true;
        g.classes_.push_back(ClassId{g.nodes_[t.o].value});
      }
    }
  }
  for (uint32_t i = 0; i < n; ++i) {
    if (!g.is_class_[i]) g.entities_.push_back(g.nodes_[i]);
  }

  auto subject = [](const auto &t) { return t.s; };
  auto object = [](const EntityTriple &t) { return t.o; };
  BuildGrouped<EntityId>(
      n, entity_triples_, subject,
      [&](const EntityTriple &t) { return g.nodes_[t.o]; },
      g.forward_.node_offsets, g.forward_.group_props,
      g.forward_.group_offsets, g.forward_.items);
  BuildGrouped<EntityId>(
      n, entity_triples_, object,
      [&](const EntityTriple &t) { return g.nodes_[t.s]; },
      g.backward_.node_offsets, g.backward_.group_props,
      g.backward_.group_offsets, g.backward_.items);
  BuildGrouped<Value>(
      n, value_triples_, subject, [](const ValueTriple &t) { return t.v; },
      g.values_.node_offsets, g.values_.group_props, g.values_.group_offsets,
      g.values_.items);
  BuildFlat<ClassId>(
      n, membership_triples_, subject,
      [&](const EntityTriple &t) { return ClassId{g.nodes_[t.o].value}; },
      g.classes_of_.offsets, g.classes_of_.items);
  BuildFlat<EntityId>(
      n, membership_triples_, object,
      [&](const EntityTriple &t) { return g.nodes_[t.s]; },
      g.members_of_.offsets, g.members_of_.items);

  std::unordered_set<uint64_t> used_props;
  for (const EntityTriple &t : entity_triples_) used_props.insert(t.p.value);
  for (const ValueTriple &t : value_triples_) used_props.insert(t.p.value);
  for (uint64_t p : used_props) g.properties_.push_back(PropertyId{p});
  std::sort(g.properties_.begin(), g.properties_.end());

  g.stats_.entities = g.entities_.size();
  g.stats_.classes = g.classes_.size();
  g.stats_.properties = g.properties_.size();
  g.stats_.entity_triples = entity_triples_.size();
  g.stats_.value_triples = value_triples_.size();
  g.stats_.membership_edges = membership_triples_.size();

  g.names_.assign(n, std::string());
  auto index_label = [&](const std::string &label, EntityId id) {
    std::string key = NormalizeName(label);
    if (key.empty()) return;
    std::vector<EntityId> &ids = g.label_index_[key];
    if (std::find(ids.begin(), ids.end(), id) == ids.end()) ids.push_back(id);
    g.max_label_words_ =
        std::max(g.max_label_words_,
                 static_cast<size_t>(std::count(key.begin(), key.end(), ' ') + 1));
  };
  for (EntityLabelRecord &rec : entity_labels_) {
    auto it = g.node_index_.find(rec.id.value);
    if (it == g.node_index_.end()) {
      if (warnings) {
        warnings->push_back("label for unknown entity " + ToString(rec.id) +
                            " skipped");
      }
      continue;
    }
    if (g.names_[it->second].empty()) g.names_[it->second] = rec.name;
    index_label(rec.name, rec.id);
    for (const std::string &alias : rec.aliases) index_label(alias, rec.id);
  }
  for (PropertyLabelRecord &rec : property_labels_) {
    if (!used_props.contains(rec.id.value) && rec.id != membership_) {
      if (warnings) {
        warnings->push_back("label for unknown property " + ToString(rec.id) +
                            " skipped");
      }
      continue;
    }
    g.property_labels_.try_emplace(
        rec.id.value, PropertyLabel{std::move(rec.name), std::move(rec.aliases)});
  }
  return g;
}

// ---------------------------------------------------------------------------
// Loading

KnowledgeGraph KnowledgeGraph::Load(const std::string &triples_path,
                                    const std::string &labels_path,
                                    PropertyId membership_property,
                                    std::vector<std::string> *warnings) {
  Builder builder(membership_property);
  ForEachJsonLine(triples_path, [&](const json &obj, size_t line) {
    EntityId s = RequireEntity(obj, "s");
    std::string ptext = RequireString(obj, "p");
    auto p = ParsePropertyId(ptext);
    if (!p) throw std::runtime_error("bad property id \"" + ptext + "\"");
    auto o = obj.find("o");
    if (o == obj.end() || !o->is_object()) {
      throw std::runtime_error("missing object \"o\"");
    }
    std::string kind = RequireString(*o, "k");
    if (kind == "e") {
      builder.AddEntityTriple(s, *p, RequireEntity(*o, "v"));
    } else {
      if (*p == membership_property) {
        throw std::runtime_error("membership triple with a literal object");
      }
      builder.AddValueTriple(s, *p, ParseValueObject(*o, triples_path, line));
    }
  });
  ForEachJsonLine(labels_path, [&](const json &obj, size_t) {
    std::string id = RequireString(obj, "id");
    std::string name = RequireString(obj, "name");
    if (auto e = ParseEntityId(id)) {
      builder.AddEntityLabel(*e, std::move(name), ReadAliases(obj));
    } else if (auto p = ParsePropertyId(id)) {
      builder.AddPropertyLabel(*p, std::move(name), ReadAliases(obj));
    } else {
      throw std::runtime_error("bad label id \"" + id + "\"");
    }
  });
  return std::move(builder).Build(warnings);
}

// ---------------------------------------------------------------------------
// Queries

template <typename T>
std::span<const T> KnowledgeGraph::GroupedIndex<T>::Find(uint32_t node,
                                                         PropertyId p) const {
  if (node + 1 >= node_offsets.size()) return {};
  auto first = group_props.begin() + node_offsets[node];
  auto last = group_props.begin() + node_offsets[node + 1];
  auto it = std::lower_bound(first, last, p);
  if (it == last || *it != p) return {};
  size_t g = static_cast<size_t>(it - group_props.begin());
  return std::span<const T>(items.data() + group_offsets[g],
                            group_offsets[g + 1] - group_offsets[g]);
}

template <typename T>
std::span<const PropertyId> KnowledgeGraph::GroupedIndex<T>::Props(
    uint32_t node) const {
  if (node + 1 >= node_offsets.size()) return {};
  return std::span<const PropertyId>(group_props.data() + node_offsets[node],
                                     node_offsets[node + 1] - node_offsets[node]);
}

template <typename T>
std::span<const T> KnowledgeGraph::FlatIndex<T>::At(uint32_t node) const {
  if (node + 1 >= offsets.size()) return {};
  return std::span<const T>(items.data() + offsets[node],
                            offsets[node + 1] - offsets[node]);
}

const uint32_t *KnowledgeGraph::NodeIndex(EntityId e) const {
  auto it = node_index_.find(e.value);
  return it == node_index_.end() ? nullptr : &it->second;
}

std::span<const EntityId> KnowledgeGraph::Forward(EntityId e,
                                                  PropertyId p) const {
  const uint32_t *i = NodeIndex(e);
  return i ? forward_.Find(*i, p) : std::span<const EntityId>();
}

std::span<const EntityId> KnowledgeGraph::Backward(EntityId e,
                                                   PropertyId p) const {
  const uint32_t *i = NodeIndex(e);
  return i ? backward_.Find(*i, p) : std::span<const EntityId>();
}

std::span<const Value> KnowledgeGraph::ValuesOf(EntityId e,
                                                PropertyId p) const {
  const uint32_t *i = NodeIndex(e);
  return i ? values_.Find(*i, p) : std::span<const Value>();
}

std::span<const ClassId> KnowledgeGraph::ClassesOf(EntityId e) const {
  const uint32_t *i = NodeIndex(e);
  return i ? classes_of_.At(*i) : std::span<const ClassId>();
}

std::span<const EntityId> KnowledgeGraph::MembersOf(ClassId c) const {
  const uint32_t *i = NodeIndex(c.entity());
  return i ? members_of_.At(*i) : std::span<const EntityId>();
}

std::span<const EntityId> KnowledgeGraph::LookupName(
    std::string_view normalized) const {
  auto it = label_index_.find(std::string(normalized));
  if (it == label_index_.end()) return {};
  return it->second;
}

std::span<const PropertyId> KnowledgeGraph::OutProperties(EntityId e) const {
  const uint32_t *i = NodeIndex(e);
  return i ? forward_.Props(*i) : std::span<const PropertyId>();
}

std::span<const PropertyId> KnowledgeGraph::InProperties(EntityId e) const {
  const uint32_t *i = NodeIndex(e);
  return i ? backward_.Props(*i) : std::span<const PropertyId>();
}

std::span<const PropertyId> KnowledgeGraph::ValueProperties(EntityId e) const {
  const uint32_t *i = NodeIndex(e);
  return i ? values_.Props(*i) : std::span<const PropertyId>();
}

bool KnowledgeGraph::IsClass(EntityId e) const {
  const uint32_t *i = NodeIndex(e);
  return i && is_class_[*i];
}

std::string KnowledgeGraph::Name(EntityId e) const {
  const uint32_t *i = NodeIndex(e);
  if (i && !names_[*i].empty()) return names_[*i];
  return ToString(e);
}

std::string KnowledgeGraph::PropertyName(PropertyId p) const {
  auto it = property_labels_.find(p.value);
  if (it == property_labels_.end()) return ToString(p);
  return it->second.name;
}

std::span<const std::string> KnowledgeGraph::PropertyAliases(
    PropertyId p) const {
  auto it = property_labels_.find(p.value);
  if (it == property_labels_.end()) return {};
  return it->second.aliases;
}

bool KnowledgeGraph::VerifyIndexes() const {
  auto contains = [](auto span, auto x) {
    return std::find(span.begin(), span.end(), x) != span.end();
  };
  size_t forward_count = 0;
  size_t backward_count = 0;
  for (uint32_t i = 0; i < nodes_.size(); ++i) {
    EntityId e = nodes_[i];
    for (PropertyId p : forward_.Props(i)) {
      for (EntityId o : forward_.Find(i, p)) {
        ++forward_count;
        if (!contains(Backward(o, p), e)) return false;
      }
    }
    for (PropertyId p : backward_.Props(i)) {
      for (EntityId s : backward_.Find(i, p)) {
        ++backward_count;
        if (!contains(Forward(s, p), e)) return false;
      }
    }
    for (ClassId c : classes_of_.At(i)) {
      if (!contains(MembersOf(c), e)) return false;
    }
    for (EntityId m : members_of_.At(i)) {
      if (!contains(ClassesOf(m), ClassId{e.value})) return false;
    }
  }
  return forward_count == backward_count &&
         forward_count == stats_.entity_triples &&
         classes_of_.items.size() == members_of_.items.size();
}

}  // namespace kglf
