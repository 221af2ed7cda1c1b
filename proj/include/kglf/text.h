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

#ifndef KGLF_TEXT_H_
#define KGLF_TEXT_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace kglf {

// Case-folds (ASCII and Latin-1 supplement letters), trims, and collapses
// runs of whitespace to one space. Used for every name comparison.
std::string NormalizeName(std::string_view text);

// Words of the normalized text, split on whitespace, with leading and
// trailing ASCII punctuation stripped from each word. Empty words dropped.
std::vector<std::string> NormalizedWords(std::string_view text);

// Number of UTF-8 code points.
size_t Utf8Length(std::string_view text);

bool IsAsciiPunct(char c);

}  // namespace kglf

#endif  // KGLF_TEXT_H_
