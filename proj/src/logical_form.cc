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

#include "kglf/logical_form.h"

#include <array>
#include <stdexcept>

namespace kglf {
namespace {

struct OpInfo {
  Op op;
  std::string_view name;
  int arity;
};

constexpr std::array<OpInfo, kNumOps> kOps = {{
    {Op::kFollowProperty, "follow_property", 2},
    {Op::kFollowBackward, "follow_backward", 2},
    {Op::kGetValue, "get_value", 2},
    {Op::kMax, "max", 1},
    {Op::kMin, "min", 1},
    {Op::kGreaterThan, "greater_than", 2},
    {Op::kEquals, "equals", 2},
    {Op::kLesserThan, "lesser_than", 2},
    {Op::kCardinality, "cardinality", 1},
    {Op::kIsIn, "is_in", 2},
    {Op::kGetFirst, "get_first", 1},
    {Op::kUnion, "union", 2},
    {Op::kIntersect, "intersect", 2},
    {Op::kDifference, "difference", 2},
    {Op::kMembers, "members", 1},
    {Op::kKeep, "keep", 2},
    {Op::kForEach, "for_each", 1},
    {Op::kArg, "arg", 1},
    {Op::kArgmax, "argmax", 1},
    {Op::kArgmin, "argmin", 1},
    {Op::kClarification, "clarification", 0},
}};

constexpr std::array<Op, kNumOps> MakeOpList() {
  std::array<Op, kNumOps> ops{};
  for (size_t i = 0; i < kNumOps; ++i) ops[i] = kOps[i].op;
  return ops;
}

constexpr std::array<Op, kNumOps> kOpList = MakeOpList();

size_t Mix(size_t h, size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

size_t HashObject(const ObjectRef &obj) {
  size_t h = std::hash<size_t>()(obj.index() + 101);
  return std::visit(
      [h](const auto &x) {
        using T = std::decay_t<decltype(x)>;
        return Mix(h, std::hash<T>()(x));
      },
      obj);
}

std::string QuoteString(const std::string &s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::span<const Op> AllOps() { return kOpList; }

std::string_view OpName(Op op) { return kOps[static_cast<size_t>(op)].name; }

std::optional<Op> OpFromName(std::string_view name) {
  for (const OpInfo &info : kOps) {
    if (info.name == name) return info.op;
  }
  return std::nullopt;
}

int OpArity(Op op) { return kOps[static_cast<size_t>(op)].arity; }

std::string ObjectToString(const ObjectRef &obj) {
  return std::visit(
      [](const auto &x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Value>) {
          if (x.kind() == ValueKind::kString) return QuoteString(x.string());
          return x.ToDisplay();
        } else {
          return ToString(x);
        }
      },
      obj);
}

LogicalForm LogicalForm::Leaf(ObjectRef object) {
  auto node = std::make_shared<Node>();
  node->leaf = true;
  node->hash = HashObject(object);
  node->object = std::move(object);
  return LogicalForm(std::move(node));
}

LogicalForm LogicalForm::Apply(Op op, std::vector<LogicalForm> children) {
  if (static_cast<int>(children.size()) != OpArity(op)) {
    throw std::invalid_argument(std::string(OpName(op)) + " takes " +
                                std::to_string(OpArity(op)) + " arguments");
  }
  auto node = std::make_shared<Node>();
  node->op = op;
  size_t h = std::hash<size_t>()(static_cast<size_t>(op) + 7);
  int depth = 0;
  size_t size = 1;
  for (const LogicalForm &c : children) {
    depth = std::max(depth, c.depth());
    size += c.size();
    h = Mix(h, c.hash());
  }
  node->depth = depth + 1;
  node->size = size;
  node->hash = h;
  node->children = std::move(children);
  return LogicalForm(std::move(node));
}

bool LogicalForm::operator==(const LogicalForm &other) const {
  if (node_ == other.node_) return true;
  if (node_->hash != other.node_->hash || node_->leaf != other.node_->leaf ||
      node_->size != other.node_->size) {
    return false;
  }
  if (node_->leaf) return node_->object == other.node_->object;
  if (node_->op != other.node_->op) return false;
  for (size_t i = 0; i < node_->children.size(); ++i) {
    if (!(node_->children[i] == other.node_->children[i])) return false;
  }
  return true;
}

std::string LogicalForm::ToText() const {
  if (is_leaf()) return ObjectToString(object());
  std::string out(OpName(op()));
  out += '(';
  for (size_t i = 0; i < children().size(); ++i) {
    if (i > 0) out += ", ";
    out += children()[i].ToText();
  }
  out += ')';
  return out;
}

}  // namespace kglf
