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

#ifndef KGLF_EVAL_RESULT_H_
#define KGLF_EVAL_RESULT_H_

#include <span>
#include <string>
#include <variant>
#include <vector>

#include "kglf/ids.h"
#include "kglf/value.h"

namespace kglf {

struct EntitySet {
  std::vector<EntityId> items;
  bool operator==(const EntitySet &) const = default;
};

struct ClassSet {
  std::vector<ClassId> items;
  bool operator==(const ClassSet &) const = default;
};

// `aligned` marks an is_in mask: one boolean per entity of its first
// argument, duplicates allowed. All other value sets are deduplicated.
struct ValueSet {
  std::vector<Value> items;
  bool aligned = false;
  bool operator==(const ValueSet &) const = default;
};

struct SingleValue {
  Value value;
  bool operator==(const SingleValue &) const = default;
};

// Per-key result inside an open for_each.
using KeyedValue = std::variant<EntitySet, ValueSet, SingleValue>;

// The dictionary built by for_each: keys are exactly the for_each argument,
// in order.
struct ParallelMap {
  std::vector<EntityId> keys;
  std::vector<KeyedValue> values;
  bool operator==(const ParallelMap &) const = default;
};

struct Clarification {
  bool operator==(const Clarification &) const = default;
};

using EvalResult = std::variant<EntitySet, ClassSet, ValueSet, SingleValue,
                                ParallelMap, Clarification>;

// True for empty sets, and for maps with no non-empty value.
bool IsEmptyResult(const EvalResult &result);
bool IsEmptyValue(const KeyedValue &value);

// Views used by the operators; SingleValue reads as a one-element set.
// Return empty spans for other alternatives.
std::span<const EntityId> EntityItems(const EvalResult &result);
std::span<const Value> ValueItems(const EvalResult &result);

std::string ToString(const EvalResult &result);

}  // namespace kglf

#endif  // KGLF_EVAL_RESULT_H_
