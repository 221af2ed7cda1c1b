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

#ifndef KGLF_TOKENS_H_
#define KGLF_TOKENS_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kglf/logical_form.h"

namespace kglf {

enum class TokenType { kGrammar, kEntity, kProperty, kClass, kValue };

// One-letter tag used in JSON ("g", "e", "p", "c", "v").
std::string_view TokenTypeTag(TokenType type);
std::optional<TokenType> TokenTypeFromTag(std::string_view tag);

// A decoder output symbol. Object tokens carry the external id ("Q3",
// "P25") or the canonical value text ("d:1867-11-07"); after id
// randomization they carry the randomized integer instead.
struct Token {
  TokenType type = TokenType::kGrammar;
  std::string value;

  auto operator<=>(const Token &) const = default;
};

using TokenList = std::vector<Token>;

inline constexpr std::string_view kStopToken = "STOP";

// Pre-order traversal followed by STOP.
TokenList Linearize(const LogicalForm &lf);

// Inverse of Linearize. Throws ParseError on unknown symbols, arity
// mismatch, tokens after the tree, or a missing STOP.
LogicalForm ParseTokens(std::span<const Token> tokens);

std::string TokensToString(std::span<const Token> tokens);

}  // namespace kglf

#endif  // KGLF_TOKENS_H_
