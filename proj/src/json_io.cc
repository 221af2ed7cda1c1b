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

#include "kglf/json_io.h"

#include <cmath>
#include <fstream>

#include "kglf/errors.h"

namespace kglf {
namespace {

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
      Json obj = Json::parse(line);
      if (!obj.is_object()) throw ParseError("expected a JSON object");
      fn(obj);
    } catch (const LoadError &) {
      throw;
    } catch (const std::exception &e) {
      throw LoadError(path, lineno, e.what());
    }
  }
}

const Json &Field(const Json &j, const char *key) {
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field \"") + key + "\"");
  return *it;
}

std::string StringField(const Json &j, const char *key) {
  const Json &v = Field(j, key);
  if (!v.is_string()) throw ParseError(std::string("\"") + key + "\" must be a string");
  return v.get<std::string>();
}

size_t IndexField(const Json &j, const char *key) {
  const Json &v = Field(j, key);
  if (!v.is_number_unsigned()) {
    throw ParseError(std::string("\"") + key + "\" must be a non-negative integer");
  }
  return v.get<size_t>();
}

EntityId EntityFromJson(const Json &j) {
  if (!j.is_string()) throw ParseError("entity id must be a string");
  auto e = ParseEntityId(j.get<std::string>());
  if (!e) throw ParseError("bad entity id \"" + j.get<std::string>() + "\"");
  return *e;
}

double Round4(double x) { return std::round(x * 1e4) / 1e4; }

Json ScoresToJson(const Scores &s) {
  return {{"complexity", Round4(s.complexity)},
          {"lexical", Round4(s.lexical)},
          {"coverage", Round4(s.coverage)},
          {"total", Round4(s.total)}};
}

Json KeyedToJson(const KeyedValue &v) {
  return std::visit(
      [](const auto &x) { return EvalResultToJson(EvalResult(x)); }, v);
}

}  // namespace

Json ValuePayloadToJson(const Value &v) {
  switch (v.kind()) {
    case ValueKind::kBoolean:
      return v.boolean();
    case ValueKind::kQuantity: {
      double q = v.quantity();
      if (std::trunc(q) == q && std::fabs(q) < 9007199254740992.0) {
        return static_cast<int64_t>(q);
      }
      return q;
    }
    case ValueKind::kDate:
    case ValueKind::kString:
      return v.ToDisplay();
  }
  return nullptr;
}

Json AnswerToJson(const AnswerSpec &answer) {
  Json j = Json::object();
  j["k"] = std::string(AnswerKindName(answer.kind));
  if (answer.kind == AnswerSpec::Kind::kEntities) {
    Json ids = Json::array();
    for (EntityId e : answer.entities) ids.push_back(ToString(e));
    j["v"] = std::move(ids);
  } else {
    j["v"] = ValuePayloadToJson(*answer.value);
  }
  return j;
}

AnswerSpec AnswerFromJson(const Json &j) {
  if (!j.is_object()) throw ParseError("answer must be an object");
  std::string kind = StringField(j, "k");
  const Json &v = Field(j, "v");
  if (kind == "entities") {
    if (!v.is_array()) throw ParseError("entity answer must be an array");
    std::vector<EntityId> ids;
    for (const Json &e : v) ids.push_back(EntityFromJson(e));
    return AnswerSpec::Entities(std::move(ids));
  }
  if (kind == "boolean") {
    if (!v.is_boolean()) throw ParseError("boolean answer must be true or false");
    return AnswerSpec::OfValue(Value::OfBoolean(v.get<bool>()));
  }
  if (kind == "quantity") {
    if (!v.is_number()) throw ParseError("quantity answer must be a number");
    return AnswerSpec::OfValue(Value::OfQuantity(v.get<double>()));
  }
  if (kind == "date") {
    if (!v.is_string()) throw ParseError("date answer must be a string");
    auto d = ParseIsoDate(v.get<std::string>());
    if (!d) throw ParseError("bad date \"" + v.get<std::string>() + "\"");
    return AnswerSpec::OfValue(Value::OfDate(*d));
  }
  if (kind == "string") {
    if (!v.is_string()) throw ParseError("string answer must be a string");
    return AnswerSpec::OfValue(Value::OfString(v.get<std::string>()));
  }
  throw ParseError("unknown answer kind \"" + kind + "\"");
}

Json EvalResultToJson(const EvalResult &result) {
  Json j = Json::object();
  if (auto *s = std::get_if<EntitySet>(&result)) {
    j["k"] = "entities";
    Json ids = Json::array();
    for (EntityId e : s->items) ids.push_back(ToString(e));
    j["v"] = std::move(ids);
  } else if (auto *s = std::get_if<ClassSet>(&result)) {
    j["k"] = "classes";
    Json ids = Json::array();
    for (ClassId c : s->items) ids.push_back(ToString(c.entity()));
    j["v"] = std::move(ids);
  } else if (auto *s = std::get_if<ValueSet>(&result)) {
    j["k"] = "values";
    Json items = Json::array();
    for (const Value &v : s->items) {
      items.push_back(EvalResultToJson(SingleValue{v}));
    }
    j["v"] = std::move(items);
    if (s->aligned) j["aligned"] = true;
  } else if (auto *s = std::get_if<SingleValue>(&result)) {
    j = AnswerToJson(AnswerSpec::OfValue(s->value));
  } else if (auto *m = std::get_if<ParallelMap>(&result)) {
    j["k"] = "parallel";
    Json entries = Json::array();
    for (size_t i = 0; i < m->keys.size(); ++i) {
      entries.push_back(
          {{"key", ToString(m->keys[i])}, {"value", KeyedToJson(m->values[i])}});
    }
    j["v"] = std::move(entries);
  } else {
    j["k"] = "clarification";
  }
  return j;
}

Json TokensToJson(std::span<const Token> tokens) {
  Json out = Json::array();
  for (const Token &t : tokens) {
    out.push_back({{"t", std::string(TokenTypeTag(t.type))}, {"v", t.value}});
  }
  return out;
}

TokenList TokensFromJson(const Json &j) {
  if (!j.is_array()) throw ParseError("tokens must be an array");
  TokenList out;
  for (const Json &t : j) {
    if (!t.is_object()) throw ParseError("token must be an object");
    std::string tag = StringField(t, "t");
    auto type = TokenTypeFromTag(tag);
    if (!type) throw ParseError("unknown token tag \"" + tag + "\"");
    out.push_back({*type, StringField(t, "v")});
  }
  return out;
}

Json AnnotationToJson(const Annotation &a) {
  Json j = Json::object();
  std::visit(
      [&](const auto &o) {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, EntityId>) {
          j["k"] = "e";
          j["v"] = ToString(o);
        } else if constexpr (std::is_same_v<T, ClassId>) {
          j["k"] = "c";
          j["v"] = ToString(o.entity());
        } else if constexpr (std::is_same_v<T, PropertyId>) {
          j["k"] = "p";
          j["v"] = ToString(o);
        } else {
          j["k"] = "v";
          j["v"] = o.ToCanonical();
        }
      },
      a.object);
  if (a.span) j["span"] = Json::array({a.span->begin, a.span->end});
  return j;
}

Annotation AnnotationFromJson(const Json &j, AnnotationSource source) {
  if (!j.is_object()) throw ParseError("annotation must be an object");
  std::string kind = StringField(j, "k");
  std::string text = StringField(j, "v");
  Annotation a;
  a.source = source;
  if (kind == "e" || kind == "c") {
    auto e = ParseEntityId(text);
    if (!e) throw ParseError("bad entity id \"" + text + "\"");
    if (kind == "e") {
      a.object = *e;
    } else {
      a.object = ClassId{e->value};
    }
  } else if (kind == "p") {
    auto p = ParsePropertyId(text);
    if (!p) throw ParseError("bad property id \"" + text + "\"");
    a.object = *p;
  } else if (kind == "v") {
    auto v = Value::FromCanonical(text);
    if (!v) throw ParseError("bad value \"" + text + "\"");
    a.object = *v;
  } else {
    throw ParseError("unknown annotation kind \"" + kind + "\"");
  }
  if (auto it = j.find("span"); it != j.end()) {
    if (!it->is_array() || it->size() != 2 || !(*it)[0].is_number_unsigned() ||
        !(*it)[1].is_number_unsigned()) {
      throw ParseError("span must be [begin, end]");
    }
    a.span = TextSpan{(*it)[0].get<size_t>(), (*it)[1].get<size_t>()};
    if (a.span->end < a.span->begin) throw ParseError("span ends before it begins");
  }
  return a;
}

Dialog DialogFromJson(const Json &j) {
  Dialog d;
  d.id = StringField(j, "id");
  if (auto it = j.find("seed"); it != j.end() && !it->is_null()) {
    d.seed = EntityFromJson(*it);
  }
  const Json &turns = Field(j, "turns");
  if (!turns.is_array()) throw ParseError("\"turns\" must be an array");
  for (const Json &t : turns) {
    if (!t.is_object()) throw ParseError("turn must be an object");
    Turn turn;
    turn.question = StringField(t, "question");
    turn.answer = AnswerFromJson(Field(t, "answer"));
    if (auto it = t.find("annotations"); it != t.end() && !it->is_null()) {
      if (!it->is_array()) throw ParseError("\"annotations\" must be an array");
      std::vector<Annotation> anns;
      for (const Json &a : *it) anns.push_back(AnnotationFromJson(a, AnnotationSource::kGold));
      turn.annotations = std::move(anns);
    }
    if (auto it = t.find("type"); it != t.end() && !it->is_null()) {
      if (!it->is_string()) throw ParseError("\"type\" must be a string");
      turn.question_type = it->get<std::string>();
    }
    d.turns.push_back(std::move(turn));
  }
  return d;
}

Json DialogToJson(const Dialog &dialog) {
  Json j = Json::object();
  j["id"] = dialog.id;
  if (dialog.seed) j["seed"] = ToString(*dialog.seed);
  Json turns = Json::array();
  for (const Turn &t : dialog.turns) {
    Json turn = Json::object();
    turn["question"] = t.question;
    turn["answer"] = AnswerToJson(t.answer);
    if (t.annotations) {
      Json anns = Json::array();
      for (const Annotation &a : *t.annotations) anns.push_back(AnnotationToJson(a));
      turn["annotations"] = std::move(anns);
    }
    if (t.question_type) turn["type"] = *t.question_type;
    turns.push_back(std::move(turn));
  }
  j["turns"] = std::move(turns);
  return j;
}

std::vector<Dialog> LoadDataset(const std::string &path) {
  std::vector<Dialog> out;
  ForEachJsonLine(path, [&](const Json &j) { out.push_back(DialogFromJson(j)); });
  return out;
}

ExternalAnnotations LoadAnnotations(const std::string &path) {
  ExternalAnnotations out;
  ForEachJsonLine(path, [&](const Json &j) {
    std::string dialog = StringField(j, "dialog_id");
    size_t turn = IndexField(j, "turn");
    const Json &objects = Field(j, "objects");
    if (!objects.is_array()) throw ParseError("\"objects\" must be an array");
    std::vector<Annotation> &anns = out[{dialog, turn}];
    for (const Json &a : objects) {
      anns.push_back(AnnotationFromJson(a, AnnotationSource::kGold));
    }
  });
  return out;
}

Json SilverToJson(const SilverExample &example, std::optional<double> weight) {
  Json j = Json::object();
  j["dialog_id"] = example.dialog_id;
  j["turn"] = example.turn;
  j["question"] = example.question;
  j["tokens"] = TokensToJson(example.tokens);
  j["f1"] = Round4(example.f1);
  j["depth"] = example.depth;
  j["scores"] = ScoresToJson(example.scores);
  j["answer"] = AnswerToJson(example.answer);
  j["truncated"] = example.truncated;
  if (example.question_type) j["type"] = *example.question_type;
  if (weight) j["weight"] = *weight;
  return j;
}

SilverExample SilverFromJson(const Json &j) {
  SilverExample s;
  s.dialog_id = StringField(j, "dialog_id");
  s.turn = IndexField(j, "turn");
  s.question = StringField(j, "question");
  if (auto it = j.find("type"); it != j.end() && it->is_string()) {
    s.question_type = it->get<std::string>();
  }
  s.tokens = TokensFromJson(Field(j, "tokens"));
  s.f1 = Field(j, "f1").get<double>();
  s.depth = Field(j, "depth").get<int>();
  if (auto it = j.find("scores"); it != j.end() && it->is_object()) {
    s.scores.complexity = it->value("complexity", 0.0);
    s.scores.lexical = it->value("lexical", 0.0);
    s.scores.coverage = it->value("coverage", 0.0);
    s.scores.total = it->value("total", 0.0);
  }
  s.answer = AnswerFromJson(Field(j, "answer"));
  s.truncated = j.value("truncated", false);
  return s;
}

std::vector<SilverExample> LoadSilver(const std::string &path) {
  std::vector<SilverExample> out;
  ForEachJsonLine(path, [&](const Json &j) { out.push_back(SilverFromJson(j)); });
  return out;
}

}  // namespace kglf
