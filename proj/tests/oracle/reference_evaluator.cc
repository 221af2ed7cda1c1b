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

#include "reference_evaluator.h"

#include <algorithm>
#include <fstream>

#include "json.hpp"
#include "kglf/text.h"

namespace kglf::oracle {
namespace {

template <typename T>
void PushUnique(std::vector<T> &out, const T &x) {
  if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
}

EntityId Entity(const std::string &text) {
  return EntityId{std::stoull(text.substr(1))};
}

Value LiteralFromJson(const nlohmann::json &o) {
  const std::string k = o.at("k").get<std::string>();
  const nlohmann::json &v = o.at("v");
  if (k == "b") return Value::OfBoolean(v.get<bool>());
  if (k == "q") {
    return Value::OfQuantity(v.is_number() ? v.get<double>()
                                           : std::stod(v.get<std::string>()));
  }
  if (k == "d") {
    const std::string s = v.get<std::string>();
    return Value::OfDate(Date{std::stoi(s.substr(0, s.size() - 6)),
                              std::stoi(s.substr(s.size() - 5, 2)),
                              std::stoi(s.substr(s.size() - 2))});
  }
  return Value::OfString(v.get<std::string>());
}

// Orders two values of one orderable kind; throws otherwise.
int Order(const Value &a, const Value &b) {
  if (a.kind() != b.kind()) throw ReferenceError("mixed kinds");
  if (a.kind() == ValueKind::kQuantity) {
    return a.quantity() < b.quantity() ? -1 : a.quantity() > b.quantity() ? 1 : 0;
  }
  if (a.kind() == ValueKind::kDate) {
    const Date &x = a.date();
    const Date &y = b.date();
    long kx = x.year * 10000L + x.month * 100 + x.day;
    long ky = y.year * 10000L + y.month * 100 + y.day;
    return kx < ky ? -1 : kx > ky ? 1 : 0;
  }
  throw ReferenceError("not orderable");
}

bool Terminator(Op op) {
  return op == Op::kArg || op == Op::kArgmax || op == Op::kArgmin;
}

// The for_each node of `lf` not already closed by a terminator.
const LogicalForm *OpenForEach(const LogicalForm &lf) {
  if (lf.is_leaf() || Terminator(lf.op())) return nullptr;
  if (lf.op() == Op::kForEach) return &lf;
  for (const LogicalForm &c : lf.children()) {
    if (const LogicalForm *f = OpenForEach(c)) return f;
  }
  return nullptr;
}

class Evaluator {
 public:
  explicit Evaluator(const ReferenceGraph &g) : g_(g) {}

  EvalResult Eval(const LogicalForm &lf) {
    if (const LogicalForm *f = OpenForEach(lf)) {
      ParallelMap m;
      m.keys = Entities(Eval(f->children()[0]));
      for (EntityId k : m.keys) {
        EvalResult r = EvalBound(lf, f, k);
        if (auto *s = std::get_if<EntitySet>(&r)) {
          m.values.emplace_back(*s);
        } else if (auto *s = std::get_if<ValueSet>(&r)) {
          m.values.emplace_back(*s);
        } else {
          m.values.emplace_back(std::get<SingleValue>(r));
        }
      }
      return m;
    }
    return EvalBound(lf, nullptr, EntityId{});
  }

 private:
  // Evaluates `lf` with the for_each node `bound` standing for {key}.
  EvalResult EvalBound(const LogicalForm &lf, const LogicalForm *bound, EntityId key) {
    if (bound == &lf) return EntitySet{{key}};
    if (lf.is_leaf()) {
      const ObjectRef &o = lf.object();
      if (auto *e = std::get_if<EntityId>(&o)) return EntitySet{{*e}};
      if (auto *c = std::get_if<ClassId>(&o)) return ClassSet{{*c}};
      if (auto *v = std::get_if<Value>(&o)) return SingleValue{*v};
      throw ReferenceError("bare property");
    }
    const Op op = lf.op();
    const auto &ch = lf.children();
    if (Terminator(op)) return Terminate(op, ch[0]);
    auto arg = [&](size_t i) { return EvalBound(ch[i], bound, key); };
    auto prop = [&](size_t i) { return std::get<PropertyId>(ch[i].object()); };

    switch (op) {
      case Op::kFollowProperty:
      case Op::kFollowBackward: {
        std::vector<EntityId> out;
        for (EntityId e : Entities(arg(0))) {
          auto found = op == Op::kFollowProperty ? g_.Objects(e, prop(1))
                                                 : g_.Subjects(e, prop(1));
          for (EntityId x : found) PushUnique(out, x);
        }
        return EntitySet{out};
      }
      case Op::kGetValue: {
        std::vector<Value> out;
        for (EntityId e : Entities(arg(0))) {
          for (const Value &v : g_.Literals(e, prop(1))) PushUnique(out, v);
        }
        return ValueSet{out};
      }
      case Op::kMax:
      case Op::kMin: {
        std::vector<Value> vals = Values(arg(0));
        if (vals.empty()) return ValueSet{};
        size_t best = 0;
        for (size_t i = 0; i < vals.size(); ++i) {
          int c = Order(vals[i], vals[best]);
          if ((op == Op::kMax && c > 0) || (op == Op::kMin && c < 0)) best = i;
        }
        return ValueSet{{vals[best]}};
      }
      case Op::kGreaterThan:
      case Op::kLesserThan:
      case Op::kEquals: {
        std::vector<Value> vals = Values(arg(0));
        std::vector<Value> rhs = Values(arg(1));
        std::vector<Value> out;
        if (vals.empty()) return ValueSet{};
        for (const Value &v : vals) {
          bool keep;
          if (op == Op::kEquals) {
            keep = v.kind() == rhs[0].kind() &&
                   (v.kind() == ValueKind::kString
                        ? NormalizeName(v.string()) == NormalizeName(rhs[0].string())
                        : v == rhs[0]);
          } else {
            int c = Order(v, rhs[0]);
            keep = op == Op::kGreaterThan ? c > 0 : c < 0;
          }
          if (keep) out.push_back(v);
        }
        return ValueSet{out};
      }
      case Op::kCardinality:
        return SingleValue{Value::OfQuantity(static_cast<double>(Entities(arg(0)).size()))};
      case Op::kIsIn: {
        std::vector<EntityId> a = Entities(arg(0));
        std::vector<EntityId> b = Entities(arg(1));
        ValueSet mask;
        mask.aligned = true;
        for (EntityId e : a) {
          mask.items.push_back(
              Value::OfBoolean(std::find(b.begin(), b.end(), e) != b.end()));
        }
        return mask;
      }
      case Op::kGetFirst: {
        std::vector<EntityId> a = Entities(arg(0));
        if (a.empty()) return EntitySet{};
        return EntitySet{{a[0]}};
      }
      case Op::kUnion: {
        std::vector<EntityId> out;
        for (EntityId e : Entities(arg(0))) PushUnique(out, e);
        for (EntityId e : Entities(arg(1))) PushUnique(out, e);
        return EntitySet{out};
      }
      case Op::kIntersect:
      case Op::kDifference: {
        std::vector<EntityId> b = Entities(arg(1));
        std::vector<EntityId> out;
        for (EntityId e : Entities(arg(0))) {
          bool in_b = std::find(b.begin(), b.end(), e) != b.end();
          if (in_b == (op == Op::kIntersect)) out.push_back(e);
        }
        return EntitySet{out};
      }
      case Op::kMembers: {
        std::vector<EntityId> out;
        const std::vector<ClassId> classes = std::get<ClassSet>(arg(0)).items;
        for (ClassId c : classes) {
          for (EntityId e : g_.MembersOf(c)) PushUnique(out, e);
        }
        return EntitySet{out};
      }
      case Op::kKeep: {
        std::vector<ClassId> wanted = std::get<ClassSet>(arg(1)).items;
        std::vector<EntityId> out;
        for (EntityId e : Entities(arg(0))) {
          for (ClassId c : g_.ClassesOf(e)) {
            if (std::find(wanted.begin(), wanted.end(), c) != wanted.end()) {
              out.push_back(e);
              break;
            }
          }
        }
        return EntitySet{out};
      }
      case Op::kForEach:
        // Reached only through Eval, which binds open for_each nodes first.
        throw ReferenceError("unbound for_each");
      case Op::kClarification:
        return Clarification{};
      default:
        break;
    }
    throw ReferenceError("unhandled operator");
  }

  EvalResult Terminate(Op op, const LogicalForm &body) {
    const LogicalForm *f = OpenForEach(body);
    if (!f) throw ReferenceError("terminator without for_each");
    std::vector<EntityId> keys = Entities(Eval(f->children()[0]));
    std::vector<EntityId> kept;
    std::vector<Value> scores;
    for (EntityId k : keys) {
      EvalResult r = EvalBound(body, f, k);
      bool empty = std::visit(
          [](const auto &x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, SingleValue>) {
              return false;
            } else if constexpr (requires { x.items; }) {
              return x.items.empty();
            } else {
              return false;
            }
          },
          r);
      if (empty) continue;
      if (op == Op::kArg) {
        kept.push_back(k);
        continue;
      }
      if (std::holds_alternative<EntitySet>(r)) throw ReferenceError("entity values");
      std::vector<Value> v = Values(r);
      if (v.size() != 1) throw ReferenceError("not a singleton");
      kept.push_back(k);
      scores.push_back(v[0]);
    }
    if (op == Op::kArg || kept.empty()) return EntitySet{kept};
    for (const Value &s : scores) {
      if (!s.orderable() || s.kind() != scores[0].kind()) {
        throw ReferenceError("not orderable");
      }
    }
    Value best = scores[0];
    for (const Value &s : scores) {
      int c = Order(s, best);
      if ((op == Op::kArgmax && c > 0) || (op == Op::kArgmin && c < 0)) best = s;
    }
    std::vector<EntityId> out;
    for (size_t i = 0; i < kept.size(); ++i) {
      if (Order(scores[i], best) == 0) out.push_back(kept[i]);
    }
    return EntitySet{out};
  }

  static std::vector<EntityId> Entities(const EvalResult &r) {
    if (auto *s = std::get_if<EntitySet>(&r)) return s->items;
    return {};
  }

  static std::vector<Value> Values(const EvalResult &r) {
    if (auto *s = std::get_if<ValueSet>(&r)) return s->items;
    if (auto *s = std::get_if<SingleValue>(&r)) return {s->value};
    return {};
  }

  const ReferenceGraph &g_;
};

}  // namespace

ReferenceGraph ReferenceGraph::FromFile(const std::string &triples_path,
                                        const std::string &membership) {
  ReferenceGraph g;
  std::ifstream in(triples_path);
  if (!in) throw std::runtime_error("cannot open " + triples_path);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    nlohmann::json t = nlohmann::json::parse(line);
    EntityId s = Entity(t.at("s").get<std::string>());
    std::string p_text = t.at("p").get<std::string>();
    PropertyId p{std::stoull(p_text.substr(1))};
    const nlohmann::json &o = t.at("o");
    if (o.at("k") == "e") {
      Link link{s, p, Entity(o.at("v").get<std::string>())};
      auto &list = p_text == membership ? g.memberships_ : g.links_;
      bool dup = std::any_of(list.begin(), list.end(), [&](const Link &x) {
        return x.s == link.s && x.p == link.p && x.o == link.o;
      });
      if (!dup) list.push_back(link);
    } else {
      Literal lit{s, p, LiteralFromJson(o)};
      bool dup = std::any_of(g.literals_.begin(), g.literals_.end(), [&](const Literal &x) {
        return x.s == lit.s && x.p == lit.p && x.v == lit.v;
      });
      if (!dup) g.literals_.push_back(lit);
    }
  }
  return g;
}

std::vector<EntityId> ReferenceGraph::Objects(EntityId s, PropertyId p) const {
  std::vector<EntityId> out;
  for (const Link &l : links_) {
    if (l.s == s && l.p == p) PushUnique(out, l.o);
  }
  return out;
}

std::vector<EntityId> ReferenceGraph::Subjects(EntityId o, PropertyId p) const {
  std::vector<EntityId> out;
  for (const Link &l : links_) {
    if (l.o == o && l.p == p) PushUnique(out, l.s);
  }
  return out;
}

std::vector<Value> ReferenceGraph::Literals(EntityId s, PropertyId p) const {
  std::vector<Value> out;
  for (const Literal &l : literals_) {
    if (l.s == s && l.p == p) PushUnique(out, l.v);
  }
  return out;
}

std::vector<ClassId> ReferenceGraph::ClassesOf(EntityId e) const {
  std::vector<ClassId> out;
  for (const Link &l : memberships_) {
    if (l.s == e) PushUnique(out, ClassId{l.o.value});
  }
  return out;
}

std::vector<EntityId> ReferenceGraph::MembersOf(ClassId c) const {
  std::vector<EntityId> out;
  for (const Link &l : memberships_) {
    if (l.o.value == c.value) PushUnique(out, l.s);
  }
  return out;
}

EvalResult ReferenceEvaluate(const LogicalForm &lf, const ReferenceGraph &g) {
  return Evaluator(g).Eval(lf);
}

}  // namespace kglf::oracle
