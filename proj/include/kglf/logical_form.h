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

#ifndef KGLF_LOGICAL_FORM_H_
#define KGLF_LOGICAL_FORM_H_

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "kglf/ids.h"
#include "kglf/value.h"

namespace kglf {

// Grammar operators. The order is the canonical enumeration order.
enum class Op {
  // Graph operators.
  kFollowProperty,
  kFollowBackward,
  kGetValue,
  // Numerical operators.
  kMax,
  kMin,
  kGreaterThan,
  kEquals,
  kLesserThan,
  kCardinality,
  // Set operators.
  kIsIn,
  kGetFirst,
  kUnion,
  kIntersect,
  kDifference,
  // Class operators.
  kMembers,
  kKeep,
  // Meta-operators.
  kForEach,
  kArg,
  kArgmax,
  kArgmin,
  // Nullary intent marker for clarification questions.
  kClarification,
};

inline constexpr size_t kNumOps = static_cast<size_t>(Op::kClarification) + 1;

std::span<const Op> AllOps();
std::string_view OpName(Op op);
std::optional<Op> OpFromName(std::string_view name);
int OpArity(Op op);

// Object referenced by a leaf.
using ObjectRef = std::variant<EntityId, ClassId, PropertyId, Value>;

std::string ObjectToString(const ObjectRef &obj);

// Immutable binary expression tree of operators with object leaves.
// Subtrees are shared; copying is cheap.
class LogicalForm {
 public:
  static LogicalForm Leaf(ObjectRef object);
  // Throws std::invalid_argument if the number of children does not match
  // the operator arity.
  static LogicalForm Apply(Op op, std::vector<LogicalForm> children);

  bool is_leaf() const { return node_->leaf; }
  // Only meaningful for non-leaves.
  Op op() const { return node_->op; }
  // Only meaningful for leaves.
  const ObjectRef &object() const { return node_->object; }
  std::span<const LogicalForm> children() const { return node_->children; }

  // Operator applications on the longest root-to-leaf path; a leaf is 0.
  int depth() const { return node_->depth; }
  // Number of nodes, i.e. the token count without STOP.
  size_t size() const { return node_->size; }
  size_t hash() const { return node_->hash; }

  // Structural equality.
  bool operator==(const LogicalForm &other) const;

  // Parenthesized prefix form, e.g. "follow_property(Q3, P25)".
  std::string ToText() const;

 private:
  struct Node {
    bool leaf = false;
    Op op = Op::kClarification;
    ObjectRef object;
    std::vector<LogicalForm> children;
    int depth = 0;
    size_t size = 1;
    size_t hash = 0;
  };

  explicit LogicalForm(std::shared_ptr<const Node> node)
      : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

}  // namespace kglf

template <>
struct std::hash<kglf::LogicalForm> {
  size_t operator()(const kglf::LogicalForm &lf) const noexcept {
    return lf.hash();
  }
};

#endif  // KGLF_LOGICAL_FORM_H_
