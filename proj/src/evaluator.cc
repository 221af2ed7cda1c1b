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

#include "kglf/evaluator.h"

#include <algorithm>
#include <unordered_set>

#include "kglf/errors.h"
#include "kglf/text.h"

namespace kglf {
namespace {

// Appends while dropping repeats; keeps first-appearance order. Switches
// from linear scans to a hash set once the list grows.
template <typename T>
class UniqueList {
 public:
  void Add(const T &x) {
    if (seen_.empty()) {
      if (items_.size() < kLinearLimit) {
        if (std::find(items_.begin(), items_.end(), x) == items_.end()) {
          items_.push_back(x);
        }
        return;
      }
      seen_.insert(items_.begin(), items_.end());
    }
    if (seen_.insert(x).second) items_.push_back(x);
  }

  template <typename Range>
  void AddAll(const Range &range) {
    for (const T &x : range) Add(x);
  }

  std::vector<T> Take() { return std::move(items_); }

 private:
  static constexpr size_t kLinearLimit = 16;
  std::vector<T> items_;
  std::unordered_set<T> seen_;
};

// Uniform read access to an operand, whether it is a top-level result, a
// per-key value of a parallel map, or a property.
struct View {
  std::span<const EntityId> entities;
  std::span<const ClassId> classes;
  std::span<const Value> values;
  PropertyId property;
};

View ViewOf(const EvalResult &r) {
  View v;
  if (auto *s = std::get_if<EntitySet>(&r)) v.entities = s->items;
  if (auto *s = std::get_if<ClassSet>(&r)) v.classes = s->items;
  v.values = ValueItems(r);
  return v;
}

View ViewOf(const KeyedValue &k) {
  View v;
  if (auto *s = std::get_if<EntitySet>(&k)) v.entities = s->items;
  if (auto *s = std::get_if<ValueSet>(&k)) v.values = s->items;
  if (auto *s = std::get_if<SingleValue>(&k)) {
    v.values = std::span<const Value>(&s->value, 1);
  }
  return v;
}

View ViewOf(const Argument &arg) {
  if (auto *p = std::get_if<PropertyId>(&arg)) {
    View v;
    v.property = *p;
    return v;
  }
  return ViewOf(std::get<std::reference_wrapper<const EvalResult>>(arg).get());
}

[[noreturn]] void KindMismatch(Op op, const std::string &detail) {
  throw EvalError(EvalError::Kind::kValueKindMismatch,
                  std::string(OpName(op)) + ": " + detail);
}

// Checks that all values share one orderable kind.
void RequireOrderable(Op op, std::span<const Value> values) {
  for (const Value &v : values) {
    if (!v.orderable()) {
      KindMismatch(op, "cannot order " + std::string(ValueKindName(v.kind())) +
                           " values");
    }
    if (v.kind() != values.front().kind()) {
      KindMismatch(op, "mixed value kinds");
    }
  }
}

bool ValuesEqual(const Value &a, const Value &b) {
  if (a.kind() != b.kind()) return false;
  if (a.kind() == ValueKind::kString) {
    return NormalizeName(a.string()) == NormalizeName(b.string());
  }
  return a == b;
}

EvalResult Extremum(Op op, std::span<const Value> values) {
  if (values.empty()) return ValueSet{};
  RequireOrderable(op, values);
  const Value *best = &values.front();
  for (const Value &v : values) {
    auto c = *CompareOrdered(v, *best);
    if ((op == Op::kMax && c > 0) || (op == Op::kMin && c < 0)) best = &v;
  }
  return ValueSet{{*best}};
}

EvalResult Compare(Op op, std::span<const Value> values, std::span<const Value> rhs) {
  if (values.empty() || rhs.empty()) return ValueSet{};
  const Value &bound = rhs.front();
  std::vector<Value> out;
  if (op == Op::kEquals) {
    for (const Value &v : values) {
      if (ValuesEqual(v, bound)) out.push_back(v);
    }
    return ValueSet{std::move(out)};
  }
  if (!bound.orderable()) {
    KindMismatch(op, "cannot order " + std::string(ValueKindName(bound.kind())) +
                         " values");
  }
  for (const Value &v : values) {
    auto c = CompareOrdered(v, bound);
    if (!c) {
      KindMismatch(op, "cannot compare " + std::string(ValueKindName(v.kind())) +
                           " with " + std::string(ValueKindName(bound.kind())));
    }
    if ((op == Op::kGreaterThan && *c > 0) || (op == Op::kLesserThan && *c < 0)) {
      out.push_back(v);
    }
  }
  return ValueSet{std::move(out)};
}

bool Contains(std::span<const EntityId> items, EntityId e) {
  return std::find(items.begin(), items.end(), e) != items.end();
}

// Membership test helper that hashes the haystack only when it is large.
class EntityLookup {
 public:
  explicit EntityLookup(std::span<const EntityId> items) : items_(items) {
    if (items.size() > 16) set_.insert(items.begin(), items.end());
  }
  bool contains(EntityId e) const {
    return set_.empty() ? Contains(items_, e) : set_.contains(e);
  }

 private:
  std::span<const EntityId> items_;
  std::unordered_set<EntityId> set_;
};

// Every operator except the for_each terminators, on non-parallel operands.
EvalResult ApplyScalar(Op op, const View &a, const View &b,
                       const KnowledgeGraph &g) {
  switch (op) {
    case Op::kFollowProperty: {
      UniqueList<EntityId> out;
      for (EntityId e : a.entities) out.AddAll(g.Forward(e, b.property));
      return EntitySet{out.Take()};
    }
    case Op::kFollowBackward: {
      UniqueList<EntityId> out;
      for (EntityId e : a.entities) out.AddAll(g.Backward(e, b.property));
      return EntitySet{out.Take()};
    }
    case Op::kGetValue: {
      UniqueList<Value> out;
      for (EntityId e : a.entities) out.AddAll(g.ValuesOf(e, b.property));
      return ValueSet{out.Take()};
    }
    case Op::kMax:
    case Op::kMin:
      return Extremum(op, a.values);
    case Op::kGreaterThan:
    case Op::kEquals:
    case Op::kLesserThan:
      return Compare(op, a.values, b.values);
    case Op::kCardinality:
      return SingleValue{Value::OfQuantity(static_cast<double>(a.entities.size()))};
    case Op::kIsIn: {
      EntityLookup in_b(b.entities);
      ValueSet mask;
      mask.aligned = true;
      mask.items.reserve(a.entities.size());
      for (EntityId e : a.entities) {
        mask.items.push_back(Value::OfBoolean(in_b.contains(e)));
      }
      return mask;
    }
    case Op::kGetFirst:
      if (a.entities.empty()) return EntitySet{};
      return EntitySet{{a.entities.front()}};
    case Op::kUnion: {
      UniqueList<EntityId> out;
      out.AddAll(a.entities);
      out.AddAll(b.entities);
      return EntitySet{out.Take()};
    }
    case Op::kIntersect:
    case Op::kDifference: {
      EntityLookup in_b(b.entities);
      bool keep_if_in = op == Op::kIntersect;
      std::vector<EntityId> out;
      for (EntityId e : a.entities) {
        if (in_b.contains(e) == keep_if_in) out.push_back(e);
      }
      return EntitySet{std::move(out)};
    }
    case Op::kMembers: {
      UniqueList<EntityId> out;
      for (ClassId c : a.classes) out.AddAll(g.MembersOf(c));
      return EntitySet{out.Take()};
    }
    case Op::kKeep: {
      std::vector<EntityId> out;
      for (EntityId e : a.entities) {
        for (ClassId c : g.ClassesOf(e)) {
          if (std::find(b.classes.begin(), b.classes.end(), c) != b.classes.end()) {
            out.push_back(e);
            break;
          }
        }
      }
      return EntitySet{std::move(out)};
    }
    case Op::kForEach: {
      ParallelMap m;
      m.keys.assign(a.entities.begin(), a.entities.end());
      m.values.reserve(m.keys.size());
      for (EntityId e : m.keys) m.values.emplace_back(EntitySet{{e}});
      return m;
    }
    case Op::kClarification:
      return Clarification{};
    case Op::kArg:
    case Op::kArgmax:
    case Op::kArgmin:
      break;
  }
  throw EvalError(EvalError::Kind::kNotEvaluable,
                  std::string(OpName(op)) + " needs a parallel argument");
}

KeyedValue ToKeyed(EvalResult r) {
  if (auto *s = std::get_if<EntitySet>(&r)) return std::move(*s);
  if (auto *s = std::get_if<ValueSet>(&r)) return std::move(*s);
  if (auto *s = std::get_if<SingleValue>(&r)) return std::move(*s);
  throw EvalError(EvalError::Kind::kNotEvaluable,
                  "operator result cannot be held per key");
}

EvalResult Terminate(Op op, const ParallelMap &m) {
  if (op == Op::kArg) {
    std::vector<EntityId> out;
    for (size_t i = 0; i < m.keys.size(); ++i) {
      if (!IsEmptyValue(m.values[i])) out.push_back(m.keys[i]);
    }
    return EntitySet{std::move(out)};
  }
  // argmax / argmin: every non-empty value must be one orderable value.
  std::vector<std::pair<EntityId, const Value *>> scored;
  for (size_t i = 0; i < m.keys.size(); ++i) {
    std::span<const Value> vals = ViewOf(m.values[i]).values;
    if (std::holds_alternative<EntitySet>(m.values[i])) {
      if (std::get<EntitySet>(m.values[i]).items.empty()) continue;
      KindMismatch(op, "per-key value is an entity set");
    }
    if (vals.empty()) continue;
    if (vals.size() != 1) KindMismatch(op, "per-key value is not a singleton");
    scored.emplace_back(m.keys[i], &vals.front());
  }
  if (scored.empty()) return EntitySet{};
  std::vector<Value> all;
  all.reserve(scored.size());
  for (const auto &[key, v] : scored) all.push_back(*v);
  RequireOrderable(op, all);
  const Value *best = scored.front().second;
  for (const auto &[key, v] : scored) {
    auto c = *CompareOrdered(*v, *best);
    if ((op == Op::kArgmax && c > 0) || (op == Op::kArgmin && c < 0)) best = v;
  }
  std::vector<EntityId> out;
  for (const auto &[key, v] : scored) {
    if (*CompareOrdered(*v, *best) == 0) out.push_back(key);
  }
  return EntitySet{std::move(out)};
}

EvalResult EvaluateNode(const LogicalForm &lf, const KnowledgeGraph &g) {
  if (lf.is_leaf()) return EvaluateLeaf(lf.object());
  std::vector<EvalResult> results;
  std::vector<Argument> args;
  results.reserve(lf.children().size());
  for (const LogicalForm &child : lf.children()) {
    if (child.is_leaf()) {
      if (auto *p = std::get_if<PropertyId>(&child.object())) {
        args.emplace_back(*p);
        continue;
      }
    }
    results.push_back(EvaluateNode(child, g));
    args.emplace_back(std::cref(results.back()));
  }
  return ApplyOperator(lf.op(), args, g);
}

}  // namespace

EvalResult EvaluateLeaf(const ObjectRef &object) {
  return std::visit(
      [](const auto &x) -> EvalResult {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, EntityId>) {
          return EntitySet{{x}};
        } else if constexpr (std::is_same_v<T, ClassId>) {
          return ClassSet{{x}};
        } else if constexpr (std::is_same_v<T, Value>) {
          return SingleValue{x};
        } else {
          throw EvalError(EvalError::Kind::kNotEvaluable,
                          "a bare property has no value");
        }
      },
      object);
}

EvalResult ApplyOperator(Op op, std::span<const Argument> args,
                         const KnowledgeGraph &g) {
  if (static_cast<int>(args.size()) != OpArity(op)) {
    throw EvalError(EvalError::Kind::kNotEvaluable,
                    std::string(OpName(op)) + ": wrong number of arguments");
  }
  const ParallelMap *parallel = nullptr;
  if (!args.empty()) {
    if (auto *r = std::get_if<std::reference_wrapper<const EvalResult>>(&args[0])) {
      parallel = std::get_if<ParallelMap>(&r->get());
    }
  }
  if (op == Op::kArg || op == Op::kArgmax || op == Op::kArgmin) {
    if (!parallel) {
      throw EvalError(EvalError::Kind::kNotEvaluable,
                      std::string(OpName(op)) + " needs a parallel argument");
    }
    return Terminate(op, *parallel);
  }
  View second = args.size() > 1 ? ViewOf(args[1]) : View{};
  if (!parallel) {
    View first = args.empty() ? View{} : ViewOf(args[0]);
    return ApplyScalar(op, first, second, g);
  }
  // Inside for_each: apply to every value, keys untouched.
  ParallelMap out;
  out.keys = parallel->keys;
  out.values.reserve(parallel->values.size());
  for (const KeyedValue &v : parallel->values) {
    out.values.push_back(ToKeyed(ApplyScalar(op, ViewOf(v), second, g)));
  }
  return out;
}

EvalResult Evaluate(const LogicalForm &lf, const KnowledgeGraph &g) {
  return EvaluateNode(lf, g);
}

}  // namespace kglf
