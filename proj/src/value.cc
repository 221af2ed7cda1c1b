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

#include "kglf/value.h"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <functional>

namespace kglf {

bool IsValidDate(const Date &d) {
  if (d.month < 1 || d.month > 12 || d.day < 1) return false;
  static constexpr int kDays[] = {31, 28, 31, 30, 31, 30,
                                  31, 31, 30, 31, 30, 31};
  int limit = kDays[d.month - 1];
  bool leap = (d.year % 4 == 0 && d.year % 100 != 0) || d.year % 400 == 0;
  if (d.month == 2 && leap) limit = 29;
  return d.day <= limit;
}

std::optional<Date> ParseIsoDate(std::string_view text) {
  bool negative = false;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
    negative = text[0] == '-';
    text.remove_prefix(1);
  }
  // YYYY-MM-DD with at least four year digits.
  size_t dash1 = text.find('-');
  if (dash1 == std::string_view::npos || dash1 < 4) return std::nullopt;
  size_t dash2 = text.find('-', dash1 + 1);
  if (dash2 != dash1 + 3 || text.size() != dash2 + 3) return std::nullopt;
  auto parse = [](std::string_view s, int &out) {
    for (char c : s) {
      if (c < '0' || c > '9') return false;
    }
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size();
  };
  Date d;
  if (!parse(text.substr(0, dash1), d.year) ||
      !parse(text.substr(dash1 + 1, 2), d.month) ||
      !parse(text.substr(dash2 + 1, 2), d.day)) {
    return std::nullopt;
  }
  if (negative) d.year = -d.year;
  if (!IsValidDate(d)) return std::nullopt;
  return d;
}

std::string FormatIsoDate(const Date &d) {
  char buf[32];
  if (d.year < 0) {
    std::snprintf(buf, sizeof(buf), "-%04d-%02d-%02d", -d.year, d.month, d.day);
  } else {
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", d.year, d.month, d.day);
  }
  return buf;
}

char ValueKindTag(ValueKind kind) {
  switch (kind) {
    case ValueKind::kDate: return 'd';
    case ValueKind::kBoolean: return 'b';
    case ValueKind::kQuantity: return 'q';
    case ValueKind::kString: return 's';
  }
  return '?';
}

std::optional<ValueKind> ValueKindFromTag(std::string_view tag) {
  if (tag == "d") return ValueKind::kDate;
  if (tag == "b") return ValueKind::kBoolean;
  if (tag == "q") return ValueKind::kQuantity;
  if (tag == "s") return ValueKind::kString;
  return std::nullopt;
}

std::string_view ValueKindName(ValueKind kind) {
  switch (kind) {
    case ValueKind::kDate: return "date";
    case ValueKind::kBoolean: return "boolean";
    case ValueKind::kQuantity: return "quantity";
    case ValueKind::kString: return "string";
  }
  return "unknown";
}

std::string FormatQuantity(double q) {
  if (q == 0) return "0";  // folds -0
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), q);
  return std::string(buf, ptr);
}

std::optional<double> ParseQuantity(std::string_view text) {
  if (!text.empty() && text[0] == '+') text.remove_prefix(1);
  if (text.empty()) return std::nullopt;
  double q = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), q);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    return std::nullopt;
  }
  if (!std::isfinite(q)) return std::nullopt;
  return q;
}

Value Value::OfDate(const Date &date) { return Value(Payload(date)); }
Value Value::OfBoolean(bool b) { return Value(Payload(b)); }
Value Value::OfQuantity(double q) { return Value(Payload(q == 0 ? 0.0 : q)); }
Value Value::OfString(std::string s) { return Value(Payload(std::move(s))); }

std::string Value::ToDisplay() const {
  switch (kind()) {
    case ValueKind::kDate: return FormatIsoDate(date());
    case ValueKind::kBoolean: return boolean() ? "true" : "false";
    case ValueKind::kQuantity: return FormatQuantity(quantity());
    case ValueKind::kString: return string();
  }
  return "";
}

std::string Value::ToCanonical() const {
  std::string out(1, ValueKindTag(kind()));
  out += ':';
  out += ToDisplay();
  return out;
}

std::optional<Value> Value::FromCanonical(std::string_view text) {
  if (text.size() < 2 || text[1] != ':') return std::nullopt;
  auto kind = ValueKindFromTag(text.substr(0, 1));
  if (!kind) return std::nullopt;
  std::string_view payload = text.substr(2);
  switch (*kind) {
    case ValueKind::kDate: {
      auto d = ParseIsoDate(payload);
      if (!d) return std::nullopt;
      return OfDate(*d);
    }
    case ValueKind::kBoolean:
      if (payload == "true") return OfBoolean(true);
      if (payload == "false") return OfBoolean(false);
      return std::nullopt;
    case ValueKind::kQuantity: {
      auto q = ParseQuantity(payload);
      if (!q) return std::nullopt;
      return OfQuantity(*q);
    }
    case ValueKind::kString:
      return OfString(std::string(payload));
  }
  return std::nullopt;
}

size_t Value::Hash() const {
  size_t h = std::hash<size_t>()(payload_.index());
  size_t p = 0;
  switch (kind()) {
    case ValueKind::kDate: {
      const Date &d = date();
      p = std::hash<long long>()(
          (static_cast<long long>(d.year) * 16 + d.month) * 32 + d.day);
      break;
    }
    case ValueKind::kBoolean: p = boolean() ? 1 : 2; break;
    case ValueKind::kQuantity: p = std::hash<double>()(quantity()); break;
    case ValueKind::kString: p = std::hash<std::string>()(string()); break;
  }
  return h ^ (p + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

std::optional<std::strong_ordering> CompareOrdered(const Value &a,
                                                   const Value &b) {
  if (!a.orderable() || a.kind() != b.kind()) return std::nullopt;
  if (a.kind() == ValueKind::kDate) return a.date() <=> b.date();
  double x = a.quantity();
  double y = b.quantity();
  if (x < y) return std::strong_ordering::less;
  if (x > y) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace kglf
