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

#include "kglf/lf_text.h"

#include <cctype>
#include <string>

#include "kglf/errors.h"

namespace kglf {
namespace {

class TextParser {
 public:
  TextParser(std::string_view text, const std::function<bool(EntityId)> &is_class)
      : text_(text), is_class_(is_class) {}

  LogicalForm Parse() {
    LogicalForm lf = ParseExpr();
    SkipSpace();
    if (pos_ != text_.size()) Fail("unexpected trailing input");
    return lf;
  }

 private:
  [[noreturn]] void Fail(const std::string &what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_));
  }

  void SkipSpace() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool Consume(char c) {
    SkipSpace();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  static bool IsWordChar(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
           c == '-' || c == '+' || c == '.';
  }

  LogicalForm ParseExpr() {
    SkipSpace();
    if (pos_ >= text_.size()) Fail("unexpected end of input");
    if (text_[pos_] == '"') return LogicalForm::Leaf(Value::OfString(ParseString()));
    size_t start = pos_;
    while (pos_ < text_.size() && IsWordChar(text_[pos_])) ++pos_;
    std::string_view word = text_.substr(start, pos_ - start);
    if (word.empty()) Fail("expected an operator or a leaf");

    if (auto op = OpFromName(word)) {
      std::vector<LogicalForm> children;
      if (Consume('(')) {
        if (!Consume(')')) {
          do {
            children.push_back(ParseExpr());
          } while (Consume(','));
          if (!Consume(')')) Fail("expected ')' or ','");
        }
      } else if (OpArity(*op) != 0) {
        Fail("expected '(' after " + std::string(word));
      }
      if (static_cast<int>(children.size()) != OpArity(*op)) {
        throw ParseError(std::string(word) + " expects " +
                         std::to_string(OpArity(*op)) + " arguments, got " +
                         std::to_string(children.size()));
      }
      return LogicalForm::Apply(*op, std::move(children));
    }
    if (auto e = ParseEntityId(word)) {
      if (is_class_ && is_class_(*e)) return LogicalForm::Leaf(ClassId{e->value});
      return LogicalForm::Leaf(*e);
    }
    if (auto p = ParsePropertyId(word)) return LogicalForm::Leaf(*p);
    if (word == "true") return LogicalForm::Leaf(Value::OfBoolean(true));
    if (word == "false") return LogicalForm::Leaf(Value::OfBoolean(false));
    if (auto d = ParseIsoDate(word)) return LogicalForm::Leaf(Value::OfDate(*d));
    if (auto q = ParseQuantity(word)) return LogicalForm::Leaf(Value::OfQuantity(*q));
    pos_ = start;
    Fail("unknown symbol \"" + std::string(word) + "\"");
  }

  std::string ParseString() {
    ++pos_;  // opening quote
    std::string out;
    while (pos_ < text_.size() && text_[pos_] != '"') {
      if (text_[pos_] == '\\' && pos_ + 1 < text_.size()) ++pos_;
      out += text_[pos_++];
    }
    if (pos_ >= text_.size()) Fail("unterminated string");
    ++pos_;
    return out;
  }

  std::string_view text_;
  const std::function<bool(EntityId)> &is_class_;
  size_t pos_ = 0;
};

}  // namespace

LogicalForm ParseLfText(std::string_view text,
                        const std::function<bool(EntityId)> &is_class) {
  return TextParser(text, is_class).Parse();
}

}  // namespace kglf
