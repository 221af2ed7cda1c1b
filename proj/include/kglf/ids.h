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

#ifndef KGLF_IDS_H_
#define KGLF_IDS_H_

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

namespace kglf {

// Graph node. External form is "Q<n>".
struct EntityId {
  uint64_t value = 0;
  auto operator<=>(const EntityId &) const = default;
};

// Edge label. External form is "P<n>".
struct PropertyId {
  uint64_t value = 0;
  auto operator<=>(const PropertyId &) const = default;
};

// An entity used in the class role, i.e. the object of a membership edge.
// Shares the "Q<n>" namespace with entities.
struct ClassId {
  uint64_t value = 0;
  auto operator<=>(const ClassId &) const = default;

  EntityId entity() const { return EntityId{value}; }
};

std::string ToString(EntityId id);
std::string ToString(PropertyId id);
std::string ToString(ClassId id);

// Accept "Q123" / "P123". Return nullopt on anything else.
std::optional<EntityId> ParseEntityId(std::string_view text);
std::optional<PropertyId> ParsePropertyId(std::string_view text);

}  // namespace kglf

template <>
struct std::hash<kglf::EntityId> {
  size_t operator()(kglf::EntityId id) const noexcept {
    return std::hash<uint64_t>()(id.value);
  }
};

template <>
struct std::hash<kglf::PropertyId> {
  size_t operator()(kglf::PropertyId id) const noexcept {
    return std::hash<uint64_t>()(id.value);
  }
};

template <>
struct std::hash<kglf::ClassId> {
  size_t operator()(kglf::ClassId id) const noexcept {
    return std::hash<uint64_t>()(id.value);
  }
};

#endif  // KGLF_IDS_H_
