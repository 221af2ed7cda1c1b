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

#include "kglf/eval_result.h"

namespace kglf {
namespace {

template <typename... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <typename... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string JoinValues(const std::vector<Value> &values) {
  std::string out = "{";
  for (size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ", ";
    out += values[i].ToCanonical();
  }
  return out + "}";
}

std::string KeyedToString(const KeyedValue &v) {
  return std::visit(
      Overloaded{
          [](const EntitySet &s) {
            std::string out = "{";
            for (size_t i = 0; i < s.items.size(); ++i) {
              if (i > 0) out += ", ";
              out += ToString(s.items[i]);
            }
            return out + "}";
          },
          [](const ValueSet &s) { return JoinValues(s.items); },
          [](const SingleValue &s) { return s.value.ToCanonical(); },
      },
      v);
}

}  // namespace

bool IsEmptyValue(const KeyedValue &value) {
  return std::visit(Overloaded{
                        [](const EntitySet &s) { return s.items.empty(); },
                        [](const ValueSet &s) { return s.items.empty(); },
                        [](const SingleValue &) { return false; },
                    },
                    value);
}

bool IsEmptyResult(const EvalResult &result) {
  return std::visit(
      Overloaded{
          [](const EntitySet &s) { return s.items.empty(); },
          [](const ClassSet &s) { return s.items.empty(); },
          [](const ValueSet &s) { return s.items.empty(); },
          [](const SingleValue &) { return false; },
          [](const ParallelMap &m) {
            for (const KeyedValue &v : m.values) {
              if (!IsEmptyValue(v)) return false;
            }
            return true;
          },
          [](const Clarification &) { return false; },
      },
      result);
}

std::span<const EntityId> EntityItems(const EvalResult &result) {
  if (auto *s = std::get_if<EntitySet>(&result)) return s->items;
  return {};
}

std::span<const Value> ValueItems(const EvalResult &result) {
  if (auto *s = std::get_if<ValueSet>(&result)) return s->items;
  if (auto *s = std::get_if<SingleValue>(&result)) {
    return std::span<const Value>(&s->value, 1);
  }
  return {};
}

std::string ToString(const EvalResult &result) {
  return std::visit(
      Overloaded{
          [](const EntitySet &s) { return KeyedToString(s); },
          [](const ClassSet &s) {
            std::string out = "{";
            for (size_t i = 0; i < s.items.size(); ++i) {
              if (i > 0) out += ", ";
              out += ToString(s.items[i]);
            }
            return out + "}";
          },
          [](const ValueSet &s) { return JoinValues(s.items); },
          [](const SingleValue &s) { return s.value.ToCanonical(); },
          [](const ParallelMap &m) {
            std::string out = "{";
            for (size_t i = 0; i < m.keys.size(); ++i) {
              if (i > 0) out += ", ";
              out += ToString(m.keys[i]) + ": " + KeyedToString(m.values[i]);
            }
            return out + "}";
          },
          [](const Clarification &) { return std::string("clarification"); },
      },
      result);
}

}  // namespace kglf
