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

#include "kglf/nel.h"

#include <algorithm>
#include <cctype>

#include "kglf/text.h"

namespace kglf {
namespace {

struct Word {
  size_t begin;
  size_t end;
};

std::vector<Word> SplitWords(std::string_view text) {
  std::vector<Word> words;
  size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i > start) words.push_back({start, i});
  }
  return words;
}

// Narrows [begin, end) past leading and trailing ASCII punctuation.
TextSpan StripPunct(std::string_view text, size_t begin, size_t end) {
  while (begin < end && IsAsciiPunct(text[begin])) ++begin;
  while (end > begin && IsAsciiPunct(text[end - 1])) --end;
  return {begin, end};
}

void AddNumbers(std::string_view text, const Word &w,
                std::vector<Annotation> &out) {
  TextSpan span = StripPunct(text, w.begin, w.end);
  // Keep a leading minus sign.
  if (span.begin > w.begin && text[span.begin - 1] == '-') --span.begin;
  std::string_view word = text.substr(span.begin, span.end - span.begin);
  if (word.empty()) return;
  if (auto d = ParseIsoDate(word)) {
    out.push_back({Value::OfDate(*d), span, AnnotationSource::kCurrent});
    return;
  }
  auto q = ParseQuantity(word);
  if (!q) return;
  out.push_back({Value::OfQuantity(*q), span, AnnotationSource::kCurrent});
  bool four_digits = word.size() == 4 &&
                     std::all_of(word.begin(), word.end(),
                                 [](char c) { return c >= '0' && c <= '9'; });
  if (four_digits) {
    Date year{static_cast<int>(*q), 1, 1};
    out.push_back({Value::OfDate(year), span, AnnotationSource::kCurrent});
  }
}

ObjectRef EntityOrClass(EntityId id, const KnowledgeGraph &g) {
  if (g.IsClass(id)) return ClassId{id.value};
  return id;
}

class AnnotationList {
 public:
  void Add(Annotation a) {
    if (std::find(objects_.begin(), objects_.end(), a.object) != objects_.end()) {
      return;
    }
    objects_.push_back(a.object);
    items_.push_back(std::move(a));
  }

  void AddAll(const std::vector<Annotation> &list, AnnotationSource source) {
    for (Annotation a : list) {
      a.source = source;
      Add(std::move(a));
    }
  }

  void AddAnswer(const AnswerSpec &answer, const KnowledgeGraph &g) {
    if (answer.kind != AnswerSpec::Kind::kEntities) return;
    for (EntityId e : answer.entities) {
      Add({EntityOrClass(e, g), std::nullopt, AnnotationSource::kPreviousAnswer});
    }
  }

  std::vector<Annotation> Take() { return std::move(items_); }

 private:
  std::vector<ObjectRef> objects_;
  std::vector<Annotation> items_;
};

// Matched and provided annotations of one turn, before history.
std::vector<Annotation> TurnAnnotations(const Dialog &dialog, size_t turn,
                                        const KnowledgeGraph &g,
                                        const ExternalAnnotations *external) {
  const Turn &t = dialog.turns[turn];
  std::vector<Annotation> out = Link(t.question, g);
  if (t.annotations) {
    for (Annotation a : *t.annotations) {
      a.source = AnnotationSource::kGold;
      out.push_back(std::move(a));
    }
  }
  if (external) {
    auto it = external->find({dialog.id, turn});
    if (it != external->end()) {
      for (Annotation a : it->second) {
        a.source = AnnotationSource::kGold;
        out.push_back(std::move(a));
      }
    }
  }
  return out;
}

}  // namespace

std::string_view AnnotationSourceName(AnnotationSource source) {
  switch (source) {
    case AnnotationSource::kCurrent: return "current";
    case AnnotationSource::kPreviousQuestion: return "previous_question";
    case AnnotationSource::kPreviousAnswer: return "previous_answer";
    case AnnotationSource::kGold: return "gold";
  }
  return "unknown";
}

AnswerSpec AnswerSpec::Entities(std::vector<EntityId> ids) {
  AnswerSpec a;
  a.kind = Kind::kEntities;
  a.entities = std::move(ids);
  return a;
}

AnswerSpec AnswerSpec::OfValue(Value v) {
  AnswerSpec a;
  switch (v.kind()) {
    case ValueKind::kBoolean: a.kind = Kind::kBoolean; break;
    case ValueKind::kQuantity: a.kind = Kind::kQuantity; break;
    case ValueKind::kDate: a.kind = Kind::kDate; break;
    case ValueKind::kString: a.kind = Kind::kString; break;
  }
  a.value = std::move(v);
  return a;
}

std::string_view AnswerKindName(AnswerSpec::Kind kind) {
  switch (kind) {
    case AnswerSpec::Kind::kEntities: return "entities";
    case AnswerSpec::Kind::kBoolean: return "boolean";
    case AnswerSpec::Kind::kQuantity: return "quantity";
    case AnswerSpec::Kind::kDate: return "date";
    case AnswerSpec::Kind::kString: return "string";
  }
  return "unknown";
}

std::optional<HistoryPolicy> HistoryPolicyFromName(std::string_view name) {
  if (name == "previous-turn" || name == "previous_turn") {
    return HistoryPolicy::kPreviousTurn;
  }
  if (name == "all-preceding" || name == "all_preceding") {
    return HistoryPolicy::kAllPreceding;
  }
  return std::nullopt;
}

std::vector<Annotation> Link(std::string_view utterance,
                             const KnowledgeGraph &g) {
  std::vector<Annotation> out;
  std::vector<Word> words = SplitWords(utterance);
  const size_t max_words = std::max<size_t>(g.max_label_words(), 1);
  size_t i = 0;
  while (i < words.size()) {
    size_t matched = 0;
    for (size_t len = std::min(max_words, words.size() - i); len > 0; --len) {
      size_t begin = words[i].begin;
      size_t end = words[i + len - 1].end;
      TextSpan raw{begin, end};
      TextSpan stripped = StripPunct(utterance, begin, end);
      for (TextSpan span : {raw, stripped}) {
        if (span.end <= span.begin) continue;
        std::string key =
            NormalizeName(utterance.substr(span.begin, span.end - span.begin));
        auto ids = g.LookupName(key);
        if (ids.empty()) continue;
        for (EntityId id : ids) {
          out.push_back({EntityOrClass(id, g), span, AnnotationSource::kCurrent});
        }
        matched = len;
        break;
      }
      if (matched) break;
    }
    if (matched) {
      i += matched;
      continue;
    }
    AddNumbers(utterance, words[i], out);
    ++i;
  }
  return out;
}

std::vector<Annotation> ResolveHistory(const Dialog &dialog, size_t turn,
                                       HistoryPolicy policy,
                                       const KnowledgeGraph &g,
                                       const ExternalAnnotations *external) {
  AnnotationList list;
  for (Annotation &a : TurnAnnotations(dialog, turn, g, external)) {
    list.Add(std::move(a));
  }
  if (turn == 0) return list.Take();
  if (policy == HistoryPolicy::kPreviousTurn) {
    list.AddAll(TurnAnnotations(dialog, turn - 1, g, external),
                AnnotationSource::kPreviousQuestion);
    list.AddAnswer(dialog.turns[turn - 1].answer, g);
    return list.Take();
  }
  if (dialog.seed) {
    list.Add({EntityOrClass(*dialog.seed, g), std::nullopt, AnnotationSource::kGold});
  }
  for (size_t k = 0; k < turn; ++k) {
    list.AddAll(TurnAnnotations(dialog, k, g, external),
                AnnotationSource::kPreviousQuestion);
    list.AddAnswer(dialog.turns[k].answer, g);
  }
  return list.Take();
}

}  // namespace kglf
