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

#ifndef KGLF_JSON_IO_H_
#define KGLF_JSON_IO_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "kglf/bfs.h"
#include "kglf/eval_result.h"
#include "kglf/nel.h"
#include "kglf/tokens.h"

namespace kglf {

using Json = nlohmann::ordered_json;

// Literal payload: JSON true/false, a number, or a string for dates and
// text.
Json ValuePayloadToJson(const Value &v);

// {"k":"entities","v":["Q1"]}, {"k":"boolean","v":true}, {"k":"quantity",
// "v":3}, {"k":"date","v":"1867-11-07"} or {"k":"string","v":"..."}.
Json AnswerToJson(const AnswerSpec &answer);
// Throws ParseError.
AnswerSpec AnswerFromJson(const Json &j);

// Answer shape for single values; "classes", "values" (with "aligned"
// for is_in masks), "parallel" and "clarification" for the rest.
Json EvalResultToJson(const EvalResult &result);

// [{"t":"g","v":"follow_property"},{"t":"e","v":"Q3"},...]
Json TokensToJson(std::span<const Token> tokens);
// Throws ParseError.
TokenList TokensFromJson(const Json &j);

// {"k":"e","v":"Q3","span":[0,5]}; "k" is one of e, c, p, v, with values
// in canonical form ("d:1867-11-07").
Json AnnotationToJson(const Annotation &a);
Annotation AnnotationFromJson(const Json &j, AnnotationSource source);

// One dialog per line:
// {"id":"d1","seed":"Q1","turns":[{"question":"...","answer":{...},
//  "annotations":[...],"type":"Simple"}]}
// Throws LoadError naming the line.
std::vector<Dialog> LoadDataset(const std::string &path);
Dialog DialogFromJson(const Json &j);
Json DialogToJson(const Dialog &dialog);

// Precomputed annotations, one turn per line:
// {"dialog_id":"d1","turn":0,"objects":[...]}. Tagged as gold.
ExternalAnnotations LoadAnnotations(const std::string &path);

// Scores and F1 are rounded to four decimals.
Json SilverToJson(const SilverExample &example,
                  std::optional<double> weight = std::nullopt);
SilverExample SilverFromJson(const Json &j);
// Throws LoadError naming the line.
std::vector<SilverExample> LoadSilver(const std::string &path);

}  // namespace kglf

#endif  // KGLF_JSON_IO_H_
