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

#include "kglf/bfs.h"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <deque>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "kglf/errors.h"
#include "kglf/evaluator.h"
#include "kglf/text.h"
#include "kglf/type_check.h"

namespace kglf {
namespace {

constexpr double kEpsilon = 1e-12;

constexpr size_t kNumBaseTypes = static_cast<size_t>(BaseType::kClarification) + 1;
constexpr size_t kNumTypeKeys = kNumBaseTypes * 2;

size_t KeyOf(LfType t) {
  return static_cast<size_t>(t.base) * 2 + (t.parallel ? 1 : 0);
}

LfType TypeOfKey(size_t key) {
  return {static_cast<BaseType>(key / 2), key % 2 == 1};
}

bool IsGraphOp(Op op) {
  return op == Op::kFollowProperty || op == Op::kFollowBackward ||
         op == Op::kGetValue;
}

struct Entry {
  LogicalForm lf;
  LfType type;
  bool has_for_each = false;
  EvalResult result;
};

class Search {
 public:
  Search(std::string_view question, std::span<const Annotation> annotations,
         const AnswerSpec &gold, const KnowledgeGraph &g,
         const BfsConfig &config, const EnumerationObserver &observer)
      : question_(question), annotations_(annotations), gold_(gold), g_(g),
        config_(config), observer_(observer),
        deadline_(std::chrono::steady_clock::now() +
                  std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                      std::chrono::duration<double>(config.timeout_seconds))) {
    std::array<bool, kNumOps> enabled{};
    for (Op op : config.operators) enabled[static_cast<size_t>(op)] = true;
    for (Op op : AllOps()) {
      if (enabled[static_cast<size_t>(op)]) ops_.push_back(op);
    }
  }

  GenerationResult Run() {
    AddLeaves();
    for (int depth = 1; depth <= config_.max_depth && !stopped_; ++depth) {
      size_t before = entries_.size();
      ExpandLayer(depth);
      if (stopped_) break;
      CloseLayer();
      // Nothing kept at this depth: deeper layers would be empty too.
      if (entries_.size() == before && depth < config_.max_depth) break;
    }
    result_.truncated = result_.truncated || stopped_;
    result_.timed_out = stopped_;
    return std::move(result_);
  }

 private:
  bool Expired() {
    if (stopped_) return true;
    if (std::chrono::steady_clock::now() >= deadline_) stopped_ = true;
    return stopped_;
  }

  // Range [begin, end) in pool_[key] holding depth `d`.
  std::pair<size_t, size_t> LayerRange(size_t key, int d) const {
    size_t begin = d == 0 ? 0 : layer_end_[key][d - 1];
    return {begin, layer_end_[key][d]};
  }

  void CloseLayer() {
    for (size_t k = 0; k < kNumTypeKeys; ++k) {
      layer_end_[k].push_back(pool_[k].size());
    }
  }

  void Store(Entry entry) {
    size_t key = KeyOf(entry.type);
    pool_[key].push_back(static_cast<uint32_t>(entries_.size()));
    entries_.push_back(std::move(entry));
  }

  void AddLeaves() {
    std::vector<ObjectRef> seen;
    for (const Annotation &a : annotations_) {
      if (std::find(seen.begin(), seen.end(), a.object) != seen.end()) continue;
      seen.push_back(a.object);
      bool is_property = std::holds_alternative<PropertyId>(a.object);
      if (is_property && config_.property_source != PropertySource::kAnnotated) {
        continue;
      }
      LogicalForm lf = LogicalForm::Leaf(a.object);
      ++result_.enumerated;
      if (observer_) observer_(lf);
      Entry entry{lf, LeafType(a.object), false, EntitySet{}};
      if (!is_property) {
        entry.result = EvaluateLeaf(a.object);
        Judge(entry, 0);
      }
      Store(std::move(entry));
    }
    CloseLayer();
  }

  void Judge(const Entry &entry, int depth) {
    if (!IsCompleteType(entry.type)) return;
    double f1 = AnswerF1(entry.result, gold_);
    result_.best_f1 = std::max(result_.best_f1, f1);
    if (f1 + kEpsilon < config_.min_f1) return;
    Candidate c{entry.lf, entry.result, f1, depth,
                ScoreLogicalForm(entry.lf, config_.max_depth, question_,
                                 annotations_, g_)};
    result_.candidates.push_back(std::move(c));
  }

  bool Forbidden(Op op, std::span<const Entry *const> args) const {
    for (size_t i = 0; i < args.size(); ++i) {
      const LogicalForm &child = args[i]->lf;
      if (child.is_leaf()) continue;
      for (const ForbiddenPattern &f : config_.forbidden) {
        if (f.parent == op && f.child == child.op() &&
            f.position == static_cast<int>(i)) {
          return true;
        }
      }
    }
    return false;
  }

  // Builds, evaluates and records op(args). `property` is set for graph
  // operators, whose second argument is a property leaf.
  void Consider(Op op, LfType type, std::span<const Entry *const> args,
                const std::optional<PropertyId> &property, int depth) {
    if (Expired()) return;
    if (op == Op::kForEach && args[0]->has_for_each) return;
    if (config_.prune_dead_ends && type.parallel && depth == config_.max_depth) {
      return;
    }
    if (Forbidden(op, args)) return;
    size_t key = KeyOf(type);
    if (kept_[key] >= config_.beam_cap) {
      result_.truncated = true;
      return;
    }

    std::vector<Argument> eval_args;
    std::vector<LogicalForm> children;
    bool has_for_each = op == Op::kForEach;
    for (const Entry *a : args) {
      eval_args.emplace_back(std::cref(a->result));
      children.push_back(a->lf);
      has_for_each = has_for_each || a->has_for_each;
    }
    if (property) {
      eval_args.emplace_back(*property);
      children.push_back(PropertyLeaf(*property));
    }
    Entry entry{LogicalForm::Apply(op, std::move(children)), type, has_for_each,
                EntitySet{}};
    ++result_.enumerated;
    if (observer_) observer_(entry.lf);
    try {
      entry.result = ApplyOperator(op, eval_args, g_);
    } catch (const EvalError &) {
      return;
    }
    if (config_.prune_empty && IsEmptyResult(entry.result)) return;
    ++kept_[key];
    Judge(entry, depth);
    if (depth < config_.max_depth) Store(std::move(entry));
  }

  const LogicalForm &PropertyLeaf(PropertyId p) {
    auto it = property_leaves_.find(p);
    if (it == property_leaves_.end()) {
      it = property_leaves_.emplace(p, LogicalForm::Leaf(p)).first;
    }
    return it->second;
  }

  std::vector<PropertyId> AdjacentProperties(const Entry &a, Op op) const {
    std::vector<PropertyId> out;
    std::unordered_set<PropertyId> seen;
    auto add_from = [&](std::span<const EntityId> entities) {
      for (EntityId e : entities) {
        std::span<const PropertyId> props =
            op == Op::kFollowProperty   ? g_.OutProperties(e)
            : op == Op::kFollowBackward ? g_.InProperties(e)
                                        : g_.ValueProperties(e);
        for (PropertyId p : props) {
          if (seen.insert(p).second) out.push_back(p);
        }
      }
    };
    if (auto *m = std::get_if<ParallelMap>(&a.result)) {
      for (const KeyedValue &v : m->values) {
        if (auto *s = std::get_if<EntitySet>(&v)) add_from(s->items);
      }
    } else {
      add_from(EntityItems(a.result));
    }
    return out;
  }

  void ExpandLayer(int depth) {
    const int prev = depth - 1;
    for (size_t k = 0; k < kNumTypeKeys; ++k) kept_[k] = 0;
    for (Op op : ops_) {
      if (stopped_) return;
      switch (OpArity(op)) {
        case 0:
          if (depth == 1) {
            auto type = ApplyType(op, {});
            Consider(op, *type, {}, std::nullopt, depth);
          }
          break;
        case 1:
          ExpandUnary(op, prev, depth);
          break;
        case 2:
          if (IsGraphOp(op)) {
            ExpandGraph(op, prev, depth);
          } else {
            ExpandBinary(op, prev, depth);
          }
          break;
      }
    }
  }

  void ExpandUnary(Op op, int prev, int depth) {
    for (size_t k = 0; k < kNumTypeKeys; ++k) {
      LfType arg = TypeOfKey(k);
      auto type = ApplyType(op, std::span<const LfType>(&arg, 1));
      if (!type) continue;
      auto [begin, end] = LayerRange(k, prev);
      for (size_t i = begin; i < end && !stopped_; ++i) {
        const Entry *a = &entries_[pool_[k][i]];
        Consider(op, *type, std::span<const Entry *const>(&a, 1), std::nullopt,
                 depth);
      }
    }
  }

  void ExpandGraph(Op op, int prev, int depth) {
    const size_t pkey = KeyOf({BaseType::kProperty, false});
    for (size_t k = 0; k < kNumTypeKeys; ++k) {
      LfType arg_types[2] = {TypeOfKey(k), {BaseType::kProperty, false}};
      auto type = ApplyType(op, arg_types);
      if (!type) continue;
      auto [begin, end] = LayerRange(k, prev);
      for (size_t i = begin; i < end && !stopped_; ++i) {
        const Entry *a = &entries_[pool_[k][i]];
        if (config_.property_source == PropertySource::kAdjacent) {
          for (PropertyId p : AdjacentProperties(*a, op)) {
            Consider(op, *type, std::span<const Entry *const>(&a, 1), p, depth);
            if (stopped_) return;
          }
        } else {
          auto [pbegin, pend] = LayerRange(pkey, 0);
          for (size_t j = pbegin; j < pend && !stopped_; ++j) {
            PropertyId p = std::get<PropertyId>(entries_[pool_[pkey][j]].lf.object());
            Consider(op, *type, std::span<const Entry *const>(&a, 1), p, depth);
          }
        }
      }
    }
  }

  void ExpandBinary(Op op, int prev, int depth) {
    for (size_t ka = 0; ka < kNumTypeKeys; ++ka) {
      for (size_t kb = 0; kb < kNumTypeKeys; ++kb) {
        LfType arg_types[2] = {TypeOfKey(ka), TypeOfKey(kb)};
        auto type = ApplyType(op, arg_types);
        if (!type) continue;
        auto [a_new_begin, a_end] = LayerRange(ka, prev);
        auto [b_new_begin, b_end] = LayerRange(kb, prev);
        for (size_t i = 0; i < a_end && !stopped_; ++i) {
          // At least one argument must come from the previous layer.
          size_t j0 = i >= a_new_begin ? 0 : b_new_begin;
          for (size_t j = j0; j < b_end && !stopped_; ++j) {
            const Entry *args[2] = {&entries_[pool_[ka][i]],
                                    &entries_[pool_[kb][j]]};
            Consider(op, *type, args, std::nullopt, depth);
          }
        }
      }
    }
  }

  std::string_view question_;
  std::span<const Annotation> annotations_;
  const AnswerSpec &gold_;
  const KnowledgeGraph &g_;
  const BfsConfig &config_;
  const EnumerationObserver &observer_;
  std::chrono::steady_clock::time_point deadline_;

  std::vector<Op> ops_;
  std::deque<Entry> entries_;
  std::array<std::vector<uint32_t>, kNumTypeKeys> pool_;
  std::array<std::vector<size_t>, kNumTypeKeys> layer_end_;
  std::array<size_t, kNumTypeKeys> kept_{};
  std::unordered_map<PropertyId, LogicalForm> property_leaves_;
  bool stopped_ = false;
  GenerationResult result_;
};

bool SingleValueOf(const EvalResult &r, const Value **out) {
  std::span<const Value> values = ValueItems(r);
  if (values.size() != 1) return false;
  *out = &values.front();
  return true;
}

bool SameAnswerValue(const Value &a, const Value &b) {
  if (a.kind() != b.kind()) return false;
  if (a.kind() == ValueKind::kString) {
    return NormalizeName(a.string()) == NormalizeName(b.string());
  }
  return a == b;
}

void CollectLeaves(const LogicalForm &lf, std::vector<PropertyId> &props,
                   std::unordered_set<EntityId> &entities) {
  if (lf.is_leaf()) {
    if (auto *p = std::get_if<PropertyId>(&lf.object())) {
      if (std::find(props.begin(), props.end(), *p) == props.end()) {
        props.push_back(*p);
      }
    } else if (auto *e = std::get_if<EntityId>(&lf.object())) {
      entities.insert(*e);
    }
    return;
  }
  for (const LogicalForm &c : lf.children()) CollectLeaves(c, props, entities);
}

}  // namespace

std::vector<Op> DefaultOperators() {
  std::vector<Op> ops;
  for (Op op : AllOps()) {
    if (op != Op::kClarification) ops.push_back(op);
  }
  return ops;
}

std::vector<ForbiddenPattern> DefaultForbiddenPatterns() {
  return {
      {Op::kFollowBackward, Op::kFollowProperty, 0},
      {Op::kFollowProperty, Op::kFollowBackward, 0},
  };
}

void BfsConfig::Validate() const {
  if (max_depth < 1) throw std::invalid_argument("max depth must be >= 1");
  if (!(timeout_seconds > 0)) {
    throw std::invalid_argument("timeout must be positive");
  }
  if (!(min_f1 >= 0 && min_f1 <= 1)) {
    throw std::invalid_argument("min F1 must be in [0, 1]");
  }
  if (beam_cap == 0) throw std::invalid_argument("beam cap must be positive");
  for (const ForbiddenPattern &f : forbidden) {
    if (f.position < 0 || f.position >= OpArity(f.parent)) {
      throw std::invalid_argument("forbidden pattern position out of range for " +
                                  std::string(OpName(f.parent)));
    }
  }
}

GenerationResult Generate(std::string_view question,
                          std::span<const Annotation> annotations,
                          const AnswerSpec &gold, const KnowledgeGraph &g,
                          const BfsConfig &config,
                          const EnumerationObserver &observer) {
  config.Validate();
  return Search(question, annotations, gold, g, config, observer).Run();
}

double AnswerF1(const EvalResult &candidate, const AnswerSpec &gold) {
  if (gold.kind == AnswerSpec::Kind::kEntities) {
    std::vector<EntityId> predicted;
    if (auto *s = std::get_if<EntitySet>(&candidate)) {
      predicted = s->items;
    } else if (auto *s = std::get_if<ClassSet>(&candidate)) {
      for (ClassId c : s->items) predicted.push_back(c.entity());
    } else {
      return 0.0;
    }
    std::unordered_set<EntityId> truth(gold.entities.begin(), gold.entities.end());
    std::unordered_set<EntityId> pred(predicted.begin(), predicted.end());
    if (truth.empty() && pred.empty()) return 1.0;
    if (truth.empty() || pred.empty()) return 0.0;
    size_t hits = 0;
    for (EntityId e : pred) hits += truth.contains(e) ? 1 : 0;
    if (hits == 0) return 0.0;
    double precision = static_cast<double>(hits) / pred.size();
    double recall = static_cast<double>(hits) / truth.size();
    return 2 * precision * recall / (precision + recall);
  }
  const Value *v = nullptr;
  if (!gold.value || !SingleValueOf(candidate, &v)) return 0.0;
  return SameAnswerValue(*v, *gold.value) ? 1.0 : 0.0;
}

double ComplexityScore(int depth, int max_depth) {
  if (max_depth <= 1) return 1.0;
  double s = 1.0 - static_cast<double>(depth - 1) / (max_depth - 1);
  return std::clamp(s, 0.0, 1.0);
}

double JaccardIndex(std::span<const std::string> a,
                    std::span<const std::string> b) {
  std::unordered_set<std::string> sa(a.begin(), a.end());
  std::unordered_set<std::string> sb(b.begin(), b.end());
  if (sa.empty() && sb.empty()) return 1.0;
  size_t common = 0;
  for (const std::string &w : sa) common += sb.contains(w) ? 1 : 0;
  return static_cast<double>(common) / (sa.size() + sb.size() - common);
}

Scores ScoreLogicalForm(const LogicalForm &lf, int max_depth,
                        std::string_view question,
                        std::span<const Annotation> annotations,
                        const KnowledgeGraph &g) {
  Scores s;
  s.complexity = ComplexityScore(lf.depth(), max_depth);

  std::vector<PropertyId> props;
  std::unordered_set<EntityId> lf_entities;
  CollectLeaves(lf, props, lf_entities);

  std::vector<std::string> question_words = NormalizedWords(question);
  if (props.empty()) {
    s.lexical = 1.0;
  } else {
    double sum = 0;
    for (PropertyId p : props) {
      std::vector<std::string> name_words = NormalizedWords(g.PropertyName(p));
      sum += JaccardIndex(name_words, question_words);
    }
    s.lexical = sum / props.size();
  }

  std::unordered_set<EntityId> annotated;
  for (const Annotation &a : annotations) {
    if (auto *e = std::get_if<EntityId>(&a.object)) annotated.insert(*e);
  }
  if (annotated.empty()) {
    s.coverage = 1.0;
  } else {
    size_t present = 0;
    for (EntityId e : annotated) present += lf_entities.contains(e) ? 1 : 0;
    s.coverage = static_cast<double>(present) / annotated.size();
  }
  s.total = (s.complexity + s.lexical + s.coverage) / 3.0;
  return s;
}

std::optional<size_t> SelectBest(std::span<const Candidate> candidates) {
  if (candidates.empty()) return std::nullopt;
  auto better = [](const Candidate &a, const Candidate &b) {
    if (std::abs(a.f1 - b.f1) > kEpsilon) return a.f1 > b.f1;
    if (std::abs(a.scores.total - b.scores.total) > kEpsilon) {
      return a.scores.total > b.scores.total;
    }
    if (a.depth != b.depth) return a.depth < b.depth;
    if (a.lf.size() != b.lf.size()) return a.lf.size() < b.lf.size();
    return Linearize(a.lf) < Linearize(b.lf);
  };
  size_t best = 0;
  for (size_t i = 1; i < candidates.size(); ++i) {
    if (better(candidates[i], candidates[best])) best = i;
  }
  return best;
}

}  // namespace kglf
