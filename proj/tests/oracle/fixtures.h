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

#ifndef KGLF_TESTS_ORACLE_FIXTURES_H_
#define KGLF_TESTS_ORACLE_FIXTURES_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "kglf/kg_store.h"
#include "kglf/nel.h"

namespace kglf::testing {

std::string DataPath(std::string_view file);

// The small curated graph shipped under tests/data, loaded once.
const KnowledgeGraph &MiniKg();
std::string MiniKgTriplesPath();
std::string MiniKgLabelsPath();

std::vector<Dialog> MicroDataset();

// One hub (Q1) linked by P1 to `neighbors` entities Q100.., each of which
// has a P2 edge to one of 100 shared objects and a quantity value.
KnowledgeGraph HubGraph(size_t neighbors);

// Resident set high-water mark of this process, in bytes; 0 if unknown.
size_t PeakRssBytes();

// Path of the kglf command-line binary.
std::string CliPath();

// Runs a shell command, capturing standard output. Returns the exit code.
int RunCommand(const std::string &command, std::string *output);

// A fresh directory under the system temporary directory.
std::string MakeTempDir(std::string_view prefix);

}  // namespace kglf::testing

#endif  // KGLF_TESTS_ORACLE_FIXTURES_H_
