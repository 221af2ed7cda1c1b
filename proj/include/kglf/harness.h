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

#ifndef KGLF_HARNESS_H_
#define KGLF_HARNESS_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kglf/bfs.h"
#include "kglf/json_io.h"
#include "kglf/kg_store.h"
#include "kglf/nel.h"
#include "kglf/tokens.h"

namespace kglf {

// Turns whose question type normalizes to "clarification".
bool IsClarificationType(const std::optional<std::string> &question_type);

// Row label for turns without a question type.
inline constexpr std::string_view kUntypedQuestion = "untyped";

struct GenerationOptions {
  BfsConfig bfs;
  HistoryPolicy policy = HistoryPolicy::kPreviousTurn;
  size_t workers = 1;
  const ExternalAnnotations *external = nullptr;
};

struct TurnOutcome {
  std::string dialog_id;
  size_t turn = 0;
  std::optional<std::string> question_type;
  std::optional<SilverExample> silver;  // set iff covered
  double best_f1 = 0;
  bool truncated = false;
  bool timed_out = false;
  size_t enumerated = 0;
  std::optional<std::string> error;
};

struct CoverageRow {
  std::string question_type;
  size_t num_questions = 0;
  size_t num_covered = 0;
  // 0 for an empty row.
  double coverage() const;
};

struct CoverageReport {
  std::vector<CoverageRow> rows;  // sorted by question type
  CoverageRow overall{"overall"};
  // Covered questions with silver depth <= 1, 2, 3 and >= 4.
  std::array<size_t, 4> depth_counts{};
  // Uncovered questions whose best F1 was positive but under min_f1.
  size_t near_misses = 0;
  size_t truncated = 0;
  size_t errors = 0;

  double DepthFraction(size_t bucket) const;
};

inline constexpr std::array<std::string_view, 4> kDepthBuckets = {"1", "2", "3",
                                                                  "4+"};

struct GenerationRun {
  std::vector<TurnOutcome> turns;  // dataset order
  CoverageReport report;
};

// Links, searches and selects a silver logical form for every turn on a
// pool of `workers` threads. Clarification turns receive the clarification
// logical form directly. Per-turn failures are recorded in the outcome.
GenerationRun RunGeneration(const std::vector<Dialog> &dataset,
                            const KnowledgeGraph &g,
                            const GenerationOptions &options);

CoverageReport SummarizeCoverage(const std::vector<TurnOutcome> &turns);
std::string FormatCoverage(const CoverageReport &report);
Json CoverageToJson(const CoverageReport &report);

struct TurnScore {
  std::string dialog_id;
  size_t turn = 0;
  std::string question_type;
  std::string metric;  // "f1" or "accuracy"
  double score = 0;
  std::optional<std::string> error;
};

struct QaRow {
  std::string question_type;
  std::string metric;  // "f1", "accuracy" or "mixed"
  size_t count = 0;
  double score = 0;  // mean over the row's turns
};

struct QaReport {
  std::vector<QaRow> rows;  // sorted by question type
  // Mean of the row scores, clarification rows excluded.
  double total_average = 0;
  // Mean over every scored turn.
  double overall = 0;
  std::vector<TurnScore> turns;
};

using Predictions = std::map<std::pair<std::string, size_t>, TokenList>;

// Entity answers are scored by F1, literal answers by exact match, and
// clarification turns by whether the clarification form was predicted.
// Missing, unparseable, ill-typed or failing predictions score 0.
QaReport EvaluatePredictions(const Predictions &predictions,
                             const std::vector<Dialog> &dataset,
                             const KnowledgeGraph &g);

std::string FormatQa(const QaReport &report);
Json QaToJson(const QaReport &report);

// Single-turn dialogs "<entity name> <property name>?" for every property
// linking a sampled entity to other entities or to its classes, plus one
// variant per property alias. The answer is every object of that property.
// Entities are sampled uniformly without replacement from the non-class
// entities. Examples whose question or answer text exceeds `max_chars`
// code points are dropped. Throws std::invalid_argument when n_entities
// exceeds the entity count.
std::vector<Dialog> GenerateAugmentation(const KnowledgeGraph &g,
                                         size_t n_entities, uint64_t seed,
                                         size_t max_chars = 256);

// Display text of an answer: entity names joined by ", ", or the value.
std::string AnswerText(const AnswerSpec &answer, const KnowledgeGraph &g);

}  // namespace kglf

#endif  // KGLF_HARNESS_H_
