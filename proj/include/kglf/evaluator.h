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

#ifndef KGLF_EVALUATOR_H_
#define KGLF_EVALUATOR_H_

#include <functional>
#include <span>
#include <variant>

#include "kglf/eval_result.h"
#include "kglf/kg_store.h"
#include "kglf/logical_form.h"

namespace kglf {

// Operand of one operator application: an evaluated subtree, or the
// property of a graph operator.
using Argument = std::variant<std::reference_wrapper<const EvalResult>, PropertyId>;

// Evaluates a type-checked logical form. Pure and deterministic. Every
// operator maps empty inputs to empty outputs. Throws
// EvalError(kValueKindMismatch) when ordering non-orderable or mixed
// values, and EvalError(kNotEvaluable) for a bare property.
EvalResult Evaluate(const LogicalForm &lf, const KnowledgeGraph &g);

// Result of a single leaf.
EvalResult EvaluateLeaf(const ObjectRef &object);

// One operator application over already evaluated arguments; the building
// block of Evaluate, also used by the search to reuse child results.
// Arguments must match the operator signature.
EvalResult ApplyOperator(Op op, std::span<const Argument> args,
                         const KnowledgeGraph &g);

}  // namespace kglf

#endif  // KGLF_EVALUATOR_H_
