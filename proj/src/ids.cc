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

#include "kglf/ids.h"

#include <charconv>

namespace kglf {
namespace {

std::optional<uint64_t> ParsePrefixed(std::string_view text, char prefix) {
  if (text.size() < 2 || text[0] != prefix) return std::nullopt;
  uint64_t n = 0;
  const char *first = text.data() + 1;
  const char *last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, n);
  if (ec != std::errc() || ptr != last) return std::nullopt;
  return n;
}

}  // namespace

std::string ToString(EntityId id) { return "Q" + std::to_string(id.value); }
std::string ToString(PropertyId id) { return "P" + std::to_string(id.value); }
std::string ToString(ClassId id) { return "Q" + std::to_string(id.value); }

std::optional<EntityId> ParseEntityId(std::string_view text) {
  auto n = ParsePrefixed(text, 'Q');
  if (!n) return std::nullopt;
  return EntityId{*n};
}

std::optional<PropertyId> ParsePropertyId(std::string_view text) {
  auto n = ParsePrefixed(text, 'P');
  if (!n) return std::nullopt;
  return PropertyId{*n};
}

}  // namespace kglf
