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

#ifndef KGLF_LF_TEXT_H_
#define KGLF_LF_TEXT_H_

#include <functional>
#include <string_view>

#include "kglf/logical_form.h"

namespace kglf {

// Parses the parenthesized prefix syntax, e.g.
//
//   argmax(cardinality(follow_backward(for_each(members(Q903)), P1303)))
//
// Leaves are Q<n> (entity, or class when `is_class` says so), P<n>,
// numbers (quantities), YYYY-MM-DD dates, true/false, and double-quoted
// strings. `clarification` may be written with or without "()".
// Throws ParseError with the byte offset of the problem.
LogicalForm ParseLfText(std::string_view text,
                        const std::function<bool(EntityId)> &is_class = {});

}  // namespace kglf

#endif  // KGLF_LF_TEXT_H_
