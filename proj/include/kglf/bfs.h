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

#ifndef KGLF_BFS_H_
#define KGLF_BFS_H_

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kglf/eval_result.h"
#include "kglf/kg_store.h"
#include "kglf/logical_form.h"
#include "kglf/nel.h"
#include "kglf/tokens.h"

namespace kglf {

// Forbids `child` as the `position`-th argument of `parent`.
struct ForbiddenPattern {
  Op parent;
  Op child;
  int position = 0;

  bool operator==(const ForbiddenPattern &) const = default;
};

// Where graph operators take their property argument from.
enum class PropertySource {
  // Properties for which the operator is non-empty on the set argument.
  kAdjacent,
  // Only property leaves present among the annotations.
  kAnnotated,
};

// The twenty grammar operators; clarification is excluded.
std::vector<Op> DefaultOperators();
// follow_backward over follow_property and the mirror pattern.
std::vector<ForbiddenPattern> DefaultForbiddenPatterns();

struct BfsConfig {
  int max_depth = 7;
  double timeout_seconds = 1200;
  double min_f1 = 0.3;
  std::vector<Op> operators = DefaultOperators();
  std::vector<ForbiddenPattern> forbidden = DefaultForbiddenPatterns();
  // Logical forms kept per (depth, result type).
  size_t beam_cap = 50000;
  PropertySource property_source = PropertySource::kAdjacent;
  // Drop logical forms whose result is empty; they are never expanded.
  bool prune_empty = true;
  // Skip parallel logical forms at the last depth, where no terminator
  // can close them.
  bool prune_dead_ends = true;

  // Throws std::invalid_argument.
  void Validate() const;
};

// Ranking heuristics, each in [0, 1]; total is their mean.
struct Scores {
  double complexity = 0;
  double lexical = 0;
  double coverage = 0;
  double total = 0;
};

struct Candidate {
  LogicalForm lf;
  EvalResult answer;
  double f1 = 0;
  int depth = 0;
  Scores scores;
};

struct GenerationResult {
  std::vector<Candidate> candidates;
  // Set when the search stopped before finishing max_depth, or a beam cap
  // dropped logical forms.
  bool truncated = false;
  bool timed_out = false;
  // Highest F1 over every complete logical form evaluated.
  double best_f1 = 0;
  size_t enumerated = 0;
};

using EnumerationObserver = std::function<void(const LogicalForm &)>;

// Breadth-first enumeration of type-legal logical forms seeded by the
// annotations. Depth n+1 applies every enabled operator to arguments of
// depth <= n with at least one of depth n. Every constructed form is
// evaluated; forms raising EvalError are discarded. Complete forms whose
// F1 against `gold` reaches min_f1 become candidates, scored against
// `question`. `observer`, when given, sees every evaluated form.
GenerationResult Generate(std::string_view question,
                          std::span<const Annotation> annotations,
                          const AnswerSpec &gold, const KnowledgeGraph &g,
                          const BfsConfig &config,
                          const EnumerationObserver &observer = {});

// Entity answers: set F1 (1 when both are empty). Other answers: 1 on exact
// match of a single value, a singleton value set counting as its element,
// else 0. Kind mismatches score 0.
double AnswerF1(const EvalResult &candidate, const AnswerSpec &gold);

double ComplexityScore(int depth, int max_depth);
double JaccardIndex(std::span<const std::string> a, std::span<const std::string> b);

Scores ScoreLogicalForm(const LogicalForm &lf, int max_depth,
                        std::string_view question,
                        std::span<const Annotation> annotations,
                        const KnowledgeGraph &g);

// Highest F1, then highest total score, then smaller depth, shorter token
// list, and lexicographically smaller tokens. nullopt when empty.
std::optional<size_t> SelectBest(std::span<const Candidate> candidates);

struct SilverExample {
  std::string dialog_id;
  size_t turn = 0;
  std::string question;
  std::optional<std::string> question_type;
  TokenList tokens;
  AnswerSpec answer;
  double f1 = 0;
  Scores scores;
  int depth = 0;
  bool truncated = false;
};

}  // namespace kglf

#endif  // KGLF_BFS_H_
