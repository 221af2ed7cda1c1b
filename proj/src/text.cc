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

#include "kglf/text.h"

#include <cstdint>

namespace kglf {
namespace {

bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

// Lower-case mapping for two-byte code points: Latin-1 supplement, Latin
// Extended-A, basic Greek and Cyrillic capitals. Others map to themselves.
uint32_t FoldCodePoint(uint32_t cp) {
  if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 0x20;
  if (cp == 0x178) return 0xFF;
  if (cp == 0x130) return 'i';
  if ((cp >= 0x100 && cp <= 0x12F) || (cp >= 0x132 && cp <= 0x137) ||
      (cp >= 0x14A && cp <= 0x177)) {
    return cp | 1;
  }
  if ((cp >= 0x139 && cp <= 0x148) || (cp >= 0x179 && cp <= 0x17E)) {
    return cp % 2 == 1 ? cp + 1 : cp;
  }
  if (cp >= 0x391 && cp <= 0x3AB && cp != 0x3A2) return cp + 0x20;
  if (cp >= 0x410 && cp <= 0x42F) return cp + 0x20;
  if (cp >= 0x400 && cp <= 0x40F) return cp + 0x50;
  return cp;
}

// Appends the lower-case form of the UTF-8 sequence starting at text[i] and
// returns its byte length.
size_t FoldChar(std::string_view text, size_t i, std::string &out) {
  unsigned char c = text[i];
  if (c < 0x80) {
    out += (c >= 'A' && c <= 'Z') ? static_cast<char>(c + 32)
                                  : static_cast<char>(c);
    return 1;
  }
  if ((c & 0xE0) == 0xC0 && i + 1 < text.size() &&
      (static_cast<unsigned char>(text[i + 1]) & 0xC0) == 0x80) {
    uint32_t cp = ((c & 0x1Fu) << 6) | (static_cast<unsigned char>(text[i + 1]) & 0x3Fu);
    uint32_t folded = FoldCodePoint(cp);
    if (folded < 0x80) {
      out += static_cast<char>(folded);
    } else {
      out += static_cast<char>(0xC0 | (folded >> 6));
      out += static_cast<char>(0x80 | (folded & 0x3F));
    }
    return 2;
  }
  size_t len = 1;
  if ((c & 0xE0) == 0xC0) len = 2;
  else if ((c & 0xF0) == 0xE0) len = 3;
  else if ((c & 0xF8) == 0xF0) len = 4;
  if (i + len > text.size()) len = text.size() - i;
  out.append(text.substr(i, len));
  return len;
}

}  // namespace

bool IsAsciiPunct(char c) {
  return (c >= '!' && c <= '/') || (c >= ':' && c <= '@') ||
         (c >= '[' && c <= '`') || (c >= '{' && c <= '~');
}

std::string NormalizeName(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool pending_space = false;
  for (size_t i = 0; i < text.size();) {
    if (IsSpace(text[i])) {
      pending_space = !out.empty();
      ++i;
      continue;
    }
    if (pending_space) {
      out += ' ';
      pending_space = false;
    }
    i += FoldChar(text, i, out);
  }
  return out;
}

std::vector<std::string> NormalizedWords(std::string_view text) {
  std::string norm = NormalizeName(text);
  std::vector<std::string> words;
  size_t start = 0;
  while (start <= norm.size()) {
    size_t end = norm.find(' ', start);
    if (end == std::string::npos) end = norm.size();
    size_t b = start;
    size_t e = end;
    while (b < e && IsAsciiPunct(norm[b])) ++b;
    while (e > b && IsAsciiPunct(norm[e - 1])) --e;
    if (e > b) words.emplace_back(norm.substr(b, e - b));
    start = end + 1;
  }
  return words;
}

size_t Utf8Length(std::string_view text) {
  size_t n = 0;
  for (unsigned char c : text) {
    if ((c & 0xC0) != 0x80) ++n;
  }
  return n;
}

}  // namespace kglf
