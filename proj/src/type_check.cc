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

#include "kglf/type_check.h"

#include <vector>

#include "kglf/errors.h"

namespace kglf {
namespace {

bool IsEntitySet(LfType t, bool allow_parallel) {
  if (t.base == BaseType::kEntity) return true;
  return t.base == BaseType::kEntitySet && (allow_parallel || !t.parallel);
}

bool IsClassSet(LfType t) {
  return t.base == BaseType::kClass || t.base == BaseType::kClassSet;
}

bool IsValueSet(LfType t, bool allow_parallel) {
  if (t.base == BaseType::kValue || t.base == BaseType::kString) return true;
  return t.base == BaseType::kValueSet && (allow_parallel || !t.parallel);
}

bool IsSingleValue(LfType t) {
  return t.base == BaseType::kValue || t.base == BaseType::kString;
}

bool IsProperty(LfType t) { return t.base == BaseType::kProperty; }

std::string Signature(Op op) {
  switch (op) {
    case Op::kFollowProperty:
    case Op::kFollowBackward:
    case Op::kGetValue:
      return "(SE, P)";
    case Op::kMax:
    case Op::kMin:
      return "(SV)";
    case Op::kGreaterThan:
    case Op::kEquals:
    case Op::kLesserThan:
      return "(SV, V)";
    case Op::kCardinality:
    case Op::kGetFirst:
      return "(SE)";
    case Op::kIsIn:
    case Op::kUnion:
    case Op::kIntersect:
    case Op::kDifference:
      return "(SE, SE) non-parallel";
    case Op::kMembers:
      return "(SC)";
    case Op::kKeep:
      return "(SE, SC)";
    case Op::kForEach:
      return "(SE) non-parallel, not inside for_each";
    case Op::kArg:
      return "(parallel SE or SV)";
    case Op::kArgmax:
    case Op::kArgmin:
      return "(parallel SV)";
    case Op::kClarification:
      return "()";
  }
  return "?";
}

struct Checked {
  LfType type;
  bool has_for_each;
};

Checked Check(const LogicalForm &lf) {
  if (lf.is_leaf()) return {LeafType(lf.object()), false};
  std::vector<LfType> arg_types;
  bool has_for_each = lf.op() == Op::kForEach;
  bool nested_for_each = false;
  for (const LogicalForm &child : lf.children()) {
    Checked c = Check(child);
    arg_types.push_back(c.type);
    if (c.has_for_each) {
      has_for_each = true;
      if (lf.op() == Op::kForEach) nested_for_each = true;
    }
  }
  std::optional<LfType> result = ApplyType(lf.op(), arg_types);
  if (!result || nested_for_each) {
    std::string actual = "(";
    for (size_t i = 0; i < arg_types.size(); ++i) {
      if (i > 0) actual += ", ";
      actual += ToString(arg_types[i]);
    }
    actual += ")";
    if (nested_for_each) actual += " containing for_each";
    throw TypeError(lf.ToText(), Signature(lf.op()), actual);
  }
  return {*result, has_for_each};
}

}  // namespace

std::string ToString(LfType type) {
  std::string s;
  switch (type.base) {
    case BaseType::kEntitySet: s = "SE"; break;
    case BaseType::kClassSet: s = "SC"; break;
    case BaseType::kValueSet: s = "SV"; break;
    case BaseType::kEntity: s = "E"; break;
    case BaseType::kClass: s = "C"; break;
    case BaseType::kValue: s = "V"; break;
    case BaseType::kProperty: s = "P"; break;
    case BaseType::kString: s = "Str"; break;
    case BaseType::kClarification: s = "Clarification"; break;
  }
  if (type.parallel) s += "[parallel]";
  return s;
}

LfType LeafType(const ObjectRef &object) {
  return std::visit(
      [](const auto &x) -> LfType {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, EntityId>) {
          return {BaseType::kEntity, false};
        } else if constexpr (std::is_same_v<T, ClassId>) {
          return {BaseType::kClass, false};
        } else if constexpr (std::is_same_v<T, PropertyId>) {
          return {BaseType::kProperty, false};
        } else {
          if (x.kind() == ValueKind::kString) return {BaseType::kString, false};
          return {BaseType::kValue, false};
        }
      },
      object);
}

std::optional<LfType> ApplyType(Op op, std::span<const LfType> args) {
  if (static_cast<int>(args.size()) != OpArity(op)) return std::nullopt;
  auto par = [&](size_t i) {
    return args[i].parallel;
  };
  switch (op) {
    case Op::kFollowProperty:
    case Op::kFollowBackward:
      if (IsEntitySet(args[0], true) && IsProperty(args[1])) {
        return LfType{BaseType::kEntitySet, par(0)};
      }
      return std::nullopt;
    case Op::kGetValue:
      if (IsEntitySet(args[0], true) && IsProperty(args[1])) {
        return LfType{BaseType::kValueSet, par(0)};
      }
      return std::nullopt;
    case Op::kMax:
    case Op::kMin:
      if (IsValueSet(args[0], true)) return LfType{BaseType::kValueSet, par(0)};
      return std::nullopt;
    case Op::kGreaterThan:
    case Op::kEquals:
    case Op::kLesserThan:
      if (IsValueSet(args[0], true) && IsSingleValue(args[1])) {
        return LfType{BaseType::kValueSet, par(0)};
      }
      return std::nullopt;
    case Op::kCardinality:
      if (!IsEntitySet(args[0], true)) return std::nullopt;
      // A per-key count is a parallel singleton value set.
      if (par(0)) return LfType{BaseType::kValueSet, true};
      return LfType{BaseType::kValue, false};
    case Op::kIsIn:
      if (IsEntitySet(args[0], false) && IsEntitySet(args[1], false)) {
        return LfType{BaseType::kValueSet, false};
      }
      return std::nullopt;
    case Op::kGetFirst:
      if (IsEntitySet(args[0], false)) return LfType{BaseType::kEntitySet};
      return std::nullopt;
    case Op::kUnion:
    case Op::kIntersect:
    case Op::kDifference:
      if (IsEntitySet(args[0], false) && IsEntitySet(args[1], false)) {
        return LfType{BaseType::kEntitySet};
      }
      return std::nullopt;
    case Op::kMembers:
      if (IsClassSet(args[0])) return LfType{BaseType::kEntitySet};
      return std::nullopt;
    case Op::kKeep:
      if (IsEntitySet(args[0], false) && IsClassSet(args[1])) {
        return LfType{BaseType::kEntitySet};
      }
      return std::nullopt;
    case Op::kForEach:
      if (IsEntitySet(args[0], false)) {
        return LfType{BaseType::kEntitySet, true};
      }
      return std::nullopt;
    case Op::kArg:
      if ((args[0].base == BaseType::kEntitySet ||
           args[0].base == BaseType::kValueSet) &&
          par(0)) {
        return LfType{BaseType::kEntitySet};
      }
      return std::nullopt;
    case Op::kArgmax:
    case Op::kArgmin:
      if (args[0].base == BaseType::kValueSet && par(0)) {
        return LfType{BaseType::kEntitySet};
      }
      return std::nullopt;
    case Op::kClarification:
      return LfType{BaseType::kClarification};
  }
  return std::nullopt;
}

LfType TypeCheck(const LogicalForm &lf) { return Check(lf).type; }

bool IsCompleteType(LfType type) {
  return !type.parallel && type.base != BaseType::kProperty;
}

}  // namespace kglf
