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

#ifndef KGLF_TYPE_CHECK_H_
#define KGLF_TYPE_CHECK_H_

#include <string>

#include "kglf/logical_form.h"

namespace kglf {

enum class BaseType {
  kEntitySet,    // SE
  kClassSet,     // SC
  kValueSet,     // SV
  kEntity,       // E
  kClass,        // C
  kValue,        // V
  kProperty,     // P
  kString,       // Str, a string literal; usable wherever V is
  kClarification,
};

// Result type of a logical form. `parallel` marks sets computed per key
// inside an open for_each; it is only ever set on SE and SV.
struct LfType {
  BaseType base = BaseType::kEntitySet;
  bool parallel = false;

  bool operator==(const LfType &) const = default;
};

std::string ToString(LfType type);

// Type of a leaf object: E, C, P, V or Str.
LfType LeafType(const ObjectRef &object);

// Result type of applying `op` to arguments of the given types, or nullopt
// when the application is illegal. Single objects are promoted to singleton
// sets where a set is expected. This does not check the for_each nesting
// rule, which needs the argument subtrees (see TypeCheck).
std::optional<LfType> ApplyType(Op op, std::span<const LfType> args);

// Type of the whole tree. Throws TypeError naming the offending subtree.
// Besides the operator signatures, rejects a for_each whose argument
// already contains a for_each.
LfType TypeCheck(const LogicalForm &lf);

// True when the tree type-checks to something that can be compared against
// an answer: not parallel and not a bare property.
bool IsCompleteType(LfType type);

}  // namespace kglf

#endif  // KGLF_TYPE_CHECK_H_
