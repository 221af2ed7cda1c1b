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

#ifndef KGLF_VALUE_H_
#define KGLF_VALUE_H_

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace kglf {

// Proleptic Gregorian calendar date.
struct Date {
  int year = 1;
  int month = 1;
  int day = 1;
  auto operator<=>(const Date &) const = default;
};

bool IsValidDate(const Date &date);

// Parses "YYYY-MM-DD" (a leading '-' or '+' on the year is accepted).
std::optional<Date> ParseIsoDate(std::string_view text);
std::string FormatIsoDate(const Date &date);

enum class ValueKind { kDate, kBoolean, kQuantity, kString };

// Single-letter tag used in the JSON Lines formats ("d", "b", "q", "s").
char ValueKindTag(ValueKind kind);
std::optional<ValueKind> ValueKindFromTag(std::string_view tag);
std::string_view ValueKindName(ValueKind kind);

// A literal attached to an entity through a property.
class Value {
 public:
  static Value OfDate(const Date &date);
  static Value OfBoolean(bool b);
  static Value OfQuantity(double q);
  static Value OfString(std::string s);

  ValueKind kind() const { return static_cast<ValueKind>(payload_.index()); }

  const Date &date() const { return std::get<Date>(payload_); }
  bool boolean() const { return std::get<bool>(payload_); }
  double quantity() const { return std::get<double>(payload_); }
  const std::string &string() const { return std::get<std::string>(payload_); }

  // Dates and quantities are totally ordered within their kind.
  bool orderable() const {
    return kind() == ValueKind::kDate || kind() == ValueKind::kQuantity;
  }

  // Payload without the kind: "1867-11-07", "3", "true", or the raw string.
  std::string ToDisplay() const;
  // Kind-prefixed, reversible form: "d:1867-11-07", "q:3", "b:true", "s:...".
  std::string ToCanonical() const;
  static std::optional<Value> FromCanonical(std::string_view text);

  bool operator==(const Value &other) const = default;
  size_t Hash() const;

 private:
  using Payload = std::variant<Date, bool, double, std::string>;
  explicit Value(Payload payload) : payload_(std::move(payload)) {}

  Payload payload_;
};

// Three-way comparison of two values of the same orderable kind. Returns
// nullopt if either value is not orderable or the kinds differ.
std::optional<std::strong_ordering> CompareOrdered(const Value &a,
                                                   const Value &b);

// Shortest decimal text that round-trips the double.
std::string FormatQuantity(double q);
std::optional<double> ParseQuantity(std::string_view text);

}  // namespace kglf

template <>
struct std::hash<kglf::Value> {
  size_t operator()(const kglf::Value &v) const noexcept { return v.Hash(); }
};

#endif  // KGLF_VALUE_H_
