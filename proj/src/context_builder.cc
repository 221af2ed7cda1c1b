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

#include "kglf/context_builder.h"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "json.hpp"
#include "kglf/errors.h"
#include "kglf/random.h"

namespace kglf {

using Json = nlohmann::ordered_json;

StructuredInput BuildContext(std::string_view current,
                             std::string_view previous_question,
                             std::string_view previous_answer,
                             std::span<const Annotation> annotations,
                             const KnowledgeGraph &g) {
  StructuredInput in;
  in.utterances.push_back({"current", std::string(current)});
  if (!previous_question.empty()) {
    in.utterances.push_back({"previous_question", std::string(previous_question)});
  }
  if (!previous_answer.empty()) {
    in.utterances.push_back({"previous_answer", std::string(previous_answer)});
  }

  std::unordered_set<EntityId> seen_entities;
  std::vector<Value> seen_values;
  std::vector<ClassId> annotated_classes;
  for (const Annotation &a : annotations) {
    if (auto *e = std::get_if<EntityId>(&a.object)) {
      if (!seen_entities.insert(*e).second) continue;
      auto classes = g.ClassesOf(*e);
      in.entities.push_back(
          {*e, g.Name(*e), {classes.begin(), classes.end()}, a.source});
    } else if (auto *c = std::get_if<ClassId>(&a.object)) {
      annotated_classes.push_back(*c);
    } else if (auto *v = std::get_if<Value>(&a.object)) {
      if (std::find(seen_values.begin(), seen_values.end(), *v) !=
          seen_values.end()) {
        continue;
      }
      seen_values.push_back(*v);
      in.values.push_back({*v, a.source});
    }
  }

  std::unordered_map<PropertyId, size_t> property_slot;
  for (const EntityObject &obj : in.entities) {
    auto add = [&](std::span<const PropertyId> props) {
      for (PropertyId p : props) {
        auto [it, inserted] = property_slot.emplace(p, in.properties.size());
        if (inserted) in.properties.push_back({p, g.PropertyName(p), {}});
        std::vector<EntityId> &ids = in.properties[it->second].entity_ids;
        if (ids.empty() || ids.back() != obj.id) ids.push_back(obj.id);
      }
    };
    add(g.OutProperties(obj.id));
    add(g.InProperties(obj.id));
    add(g.ValueProperties(obj.id));
  }

  std::unordered_set<ClassId> seen_classes;
  auto add_class = [&](ClassId c) {
    if (seen_classes.insert(c).second) in.classes.push_back({c, g.Name(c)});
  };
  for (const EntityObject &obj : in.entities) {
    for (ClassId c : obj.class_ids) add_class(c);
  }
  for (ClassId c : annotated_classes) add_class(c);
  return in;
}

std::optional<uint32_t> IdMapping::Find(EntityId e) const {
  for (const auto &[id, r] : entities_) {
    if (id == e) return r;
  }
  return std::nullopt;
}

std::optional<uint32_t> IdMapping::Find(const Value &v) const {
  for (const auto &[value, r] : values_) {
    if (value == v) return r;
  }
  return std::nullopt;
}

std::optional<EntityId> IdMapping::EntityAt(uint32_t id) const {
  for (const auto &[e, r] : entities_) {
    if (r == id) return e;
  }
  return std::nullopt;
}

std::optional<Value> IdMapping::ValueAt(uint32_t id) const {
  for (const auto &[v, r] : values_) {
    if (r == id) return v;
  }
  return std::nullopt;
}

IdMapping Randomize(const StructuredInput &input, uint64_t seed,
                    const RandomizationConfig &config) {
  if (input.entities.size() > config.entity_vocabulary) {
    throw RandomizationOverflow(
        std::to_string(input.entities.size()) + " entities exceed a vocabulary of " +
        std::to_string(config.entity_vocabulary));
  }
  if (input.values.size() > config.value_vocabulary) {
    throw RandomizationOverflow(
        std::to_string(input.values.size()) + " values exceed a vocabulary of " +
        std::to_string(config.value_vocabulary));
  }
  IdMapping m;
  m.seed_ = seed;
  std::mt19937_64 rng(seed);
  std::vector<uint32_t> entity_ids =
      SampleDistinct(rng, config.entity_vocabulary, input.entities.size());
  for (size_t i = 0; i < input.entities.size(); ++i) {
    m.entities_.emplace_back(input.entities[i].id, entity_ids[i]);
  }
  std::vector<uint32_t> value_ids =
      SampleDistinct(rng, config.value_vocabulary, input.values.size());
  for (size_t i = 0; i < input.values.size(); ++i) {
    m.values_.emplace_back(input.values[i].value, value_ids[i]);
  }
  return m;
}

TokenList RewriteTokens(std::span<const Token> tokens, const IdMapping &mapping) {
  TokenList out(tokens.begin(), tokens.end());
  for (Token &t : out) {
    std::optional<uint32_t> r;
    if (t.type == TokenType::kEntity) {
      if (auto e = ParseEntityId(t.value)) r = mapping.Find(*e);
    } else if (t.type == TokenType::kValue) {
      if (auto v = Value::FromCanonical(t.value)) r = mapping.Find(*v);
    } else {
      continue;
    }
    if (!r) throw Error("no randomized id for token " + t.value);
    t.value = std::to_string(*r);
  }
  return out;
}

TokenList RestoreTokens(std::span<const Token> tokens, const IdMapping &mapping) {
  TokenList out(tokens.begin(), tokens.end());
  for (Token &t : out) {
    if (t.type != TokenType::kEntity && t.type != TokenType::kValue) continue;
    uint32_t id = 0;
    try {
      size_t used = 0;
      unsigned long parsed = std::stoul(t.value, &used);
      if (used != t.value.size()) throw std::invalid_argument(t.value);
      id = static_cast<uint32_t>(parsed);
    } catch (const std::exception &) {
      throw Error("not a randomized id: " + t.value);
    }
    if (t.type == TokenType::kEntity) {
      auto e = mapping.EntityAt(id);
      if (!e) throw Error("unknown randomized entity id " + t.value);
      t.value = ToString(*e);
    } else {
      auto v = mapping.ValueAt(id);
      if (!v) throw Error("unknown randomized value id " + t.value);
      t.value = v->ToCanonical();
    }
  }
  return out;
}

std::string SerializeContext(const StructuredInput &input,
                             const IdMapping &mapping) {
  auto randomized = [&](EntityId e) -> Json {
    auto r = mapping.Find(e);
    if (!r) throw Error("entity " + ToString(e) + " missing from the id mapping");
    return *r;
  };
  Json root = Json::object();
  Json &utterances = root["utterances"] = Json::array();
  for (const Utterance &u : input.utterances) {
    utterances.push_back({{"role", u.role}, {"text", u.text}});
  }
  Json &entities = root["entities"] = Json::array();
  for (const EntityObject &e : input.entities) {
    Json classes = Json::array();
    for (ClassId c : e.class_ids) classes.push_back(ToString(c.entity()));
    entities.push_back({{"randomized_id", randomized(e.id)},
                        {"name", e.name},
                        {"class_ids", std::move(classes)},
                        {"source", AnnotationSourceName(e.source)}});
  }
  Json &properties = root["properties"] = Json::array();
  for (const PropertyObject &p : input.properties) {
    Json ids = Json::array();
    for (EntityId e : p.entity_ids) ids.push_back(randomized(e));
    properties.push_back({{"property_id", ToString(p.id)},
                          {"name", p.name},
                          {"entity_ids", std::move(ids)}});
  }
  Json &classes = root["classes"] = Json::array();
  for (const ClassObject &c : input.classes) {
    classes.push_back({{"class_id", ToString(c.id.entity())}, {"name", c.name}});
  }
  Json &values = root["values"] = Json::array();
  for (const ValueObject &v : input.values) {
    auto r = mapping.Find(v.value);
    if (!r) throw Error("value " + v.value.ToCanonical() + " missing from the id mapping");
    values.push_back({{"randomized_id", *r},
                      {"value", v.value.ToDisplay()},
                      {"source", AnnotationSourceName(v.source)}});
  }
  return root.dump();
}

}  // namespace kglf
