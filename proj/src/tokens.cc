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

#include "kglf/tokens.h"

#include "kglf/errors.h"

namespace kglf {
namespace {

void Emit(const LogicalForm &lf, TokenList &out) {
  if (!lf.is_leaf()) {
    out.push_back({TokenType::kGrammar, std::string(OpName(lf.op()))});
    for (const LogicalForm &child : lf.children()) Emit(child, out);
    return;
  }
  std::visit(
      [&out](const auto &x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, EntityId>) {
          out.push_back({TokenType::kEntity, ToString(x)});
        } else if constexpr (std::is_same_v<T, ClassId>) {
          out.push_back({TokenType::kClass, ToString(x)});
        } else if constexpr (std::is_same_v<T, PropertyId>) {
          out.push_back({TokenType::kProperty, ToString(x)});
        } else {
          out.push_back({TokenType::kValue, x.ToCanonical()});
        }
      },
      lf.object());
}

class TokenParser {
 public:
  explicit TokenParser(std::span<const Token> tokens) : tokens_(tokens) {}

  LogicalForm Parse() {
    LogicalForm lf = ParseTree();
    if (pos_ >= tokens_.size()) throw ParseError("missing STOP token");
    const Token &t = tokens_[pos_];
    if (t.type != TokenType::kGrammar || t.value != kStopToken) {
      throw ParseError("unexpected token \"" + t.value + "\" at position " +
                       std::to_string(pos_) + " after a complete tree");
    }
    if (pos_ + 1 != tokens_.size()) {
      throw ParseError("tokens after STOP at position " +
                       std::to_string(pos_ + 1));
    }
    return lf;
  }

 private:
  LogicalForm ParseTree() {
    if (pos_ >= tokens_.size()) {
      throw ParseError("token list ended inside a tree");
    }
    const Token &t = tokens_[pos_];
    size_t at = pos_++;
    switch (t.type) {
      case TokenType::kGrammar: {
        if (t.value == kStopToken) {
          throw ParseError("STOP at position " + std::to_string(at) +
                           " where a subtree was expected");
        }
        auto op = OpFromName(t.value);
        if (!op) throw ParseError("unknown operator \"" + t.value + "\"");
        std::vector<LogicalForm> children;
        for (int i = 0; i < OpArity(*op); ++i) {
          if (pos_ < tokens_.size() &&
              tokens_[pos_].type == TokenType::kGrammar &&
              tokens_[pos_].value == kStopToken) {
            throw ParseError(t.value + " expects " +
                             std::to_string(OpArity(*op)) +
                             " arguments, got " + std::to_string(i));
          }
          children.push_back(ParseTree());
        }
        return LogicalForm::Apply(*op, std::move(children));
      }
      case TokenType::kEntity:
        if (auto e = ParseEntityId(t.value)) return LogicalForm::Leaf(*e);
        break;
      case TokenType::kClass:
        if (auto e = ParseEntityId(t.value)) {
          return LogicalForm::Leaf(ClassId{e->value});
        }
        break;
      case TokenType::kProperty:
        if (auto p = ParsePropertyId(t.value)) return LogicalForm::Leaf(*p);
        break;
      case TokenType::kValue:
        if (auto v = Value::FromCanonical(t.value)) {
          return LogicalForm::Leaf(std::move(*v));
        }
        break;
    }
    throw ParseError("malformed " + std::string(TokenTypeTag(t.type)) +
                     " token \"" + t.value + "\" at position " +
                     std::to_string(at));
  }

  std::span<const Token> tokens_;
  size_t pos_ = 0;
};

}  // namespace

std::string_view TokenTypeTag(TokenType type) {
  switch (type) {
    case TokenType::kGrammar: return "g";
    case TokenType::kEntity: return "e";
    case TokenType::kProperty: return "p";
    case TokenType::kClass: return "c";
    case TokenType::kValue: return "v";
  }
  return "?";
}

std::optional<TokenType> TokenTypeFromTag(std::string_view tag) {
  if (tag == "g") return TokenType::kGrammar;
  if (tag == "e") return TokenType::kEntity;
  if (tag == "p") return TokenType::kProperty;
  if (tag == "c") return TokenType::kClass;
  if (tag == "v") return TokenType::kValue;
  return std::nullopt;
}

TokenList Linearize(const LogicalForm &lf) {
  TokenList out;
  out.reserve(lf.size() + 1);
  Emit(lf, out);
  out.push_back({TokenType::kGrammar, std::string(kStopToken)});
  return out;
}

LogicalForm ParseTokens(std::span<const Token> tokens) {
  return TokenParser(tokens).Parse();
}

std::string TokensToString(std::span<const Token> tokens) {
  std::string out;
  for (const Token &t : tokens) {
    if (!out.empty()) out += ' ';
    if (t.type != TokenType::kGrammar) {
      out += TokenTypeTag(t.type);
      out += ':';
    }
    out += t.value;
  }
  return out;
}

}  // namespace kglf
