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

#ifndef KGLF_NEL_H_
#define KGLF_NEL_H_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kglf/kg_store.h"
#include "kglf/logical_form.h"

namespace kglf {

enum class AnnotationSource {
  kCurrent,           // string match on the current utterance
  kPreviousQuestion,  // string match or gold annotation of an earlier turn
  kPreviousAnswer,    // gold answer entities of an earlier turn
  kGold,              // dataset-provided or precomputed annotation
};

std::string_view AnnotationSourceName(AnnotationSource source);

// Byte offsets [begin, end) into the UTF-8 utterance.
struct TextSpan {
  size_t begin = 0;
  size_t end = 0;
  bool operator==(const TextSpan &) const = default;
};

struct Annotation {
  ObjectRef object;
  std::optional<TextSpan> span;
  AnnotationSource source = AnnotationSource::kCurrent;

  bool operator==(const Annotation &) const = default;
};

struct AnswerSpec {
  enum class Kind { kEntities, kBoolean, kQuantity, kDate, kString };

  Kind kind = Kind::kEntities;
  std::vector<EntityId> entities;  // kEntities only
  std::optional<Value> value;      // every other kind

  static AnswerSpec Entities(std::vector<EntityId> ids);
  // Kind follows the value kind.
  static AnswerSpec OfValue(Value v);

  bool operator==(const AnswerSpec &) const = default;
};

std::string_view AnswerKindName(AnswerSpec::Kind kind);

struct Turn {
  std::string question;
  AnswerSpec answer;
  std::optional<std::vector<Annotation>> annotations;  // gold, when given
  std::optional<std::string> question_type;
};

struct Dialog {
  std::string id;
  std::vector<Turn> turns;
  std::optional<EntityId> seed;  // topic entity, when the dataset has one
};

enum class HistoryPolicy {
  kPreviousTurn,  // previous question's annotations and previous answer
  kAllPreceding,  // every earlier turn, plus the seed entity
};

std::optional<HistoryPolicy> HistoryPolicyFromName(std::string_view name);

// Annotations supplied from outside (e.g. an external linking service),
// keyed by (dialog id, turn index).
using ExternalAnnotations =
    std::map<std::pair<std::string, size_t>, std::vector<Annotation>>;

// String-matching entity linking. At each word position the longest run of
// words whose normalized text equals a stored name or alias is taken; every
// entity sharing that name is emitted, and shorter matches inside the run
// are not. Classes come out as ClassId. Integer and decimal literals become
// quantities, YYYY-MM-DD words become dates, and four-digit integers
// additionally become January 1st of that year.
std::vector<Annotation> Link(std::string_view utterance,
                             const KnowledgeGraph &g);

// Annotations for one turn: its own links and gold annotations, then the
// history objects selected by `policy`. Objects already present are not
// repeated; the first occurrence wins.
std::vector<Annotation> ResolveHistory(const Dialog &dialog, size_t turn,
                                       HistoryPolicy policy,
                                       const KnowledgeGraph &g,
                                       const ExternalAnnotations *external = nullptr);

}  // namespace kglf

#endif  // KGLF_NEL_H_
