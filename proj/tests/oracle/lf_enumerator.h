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

// Test-side logical form generators: an exhaustive enumerator that filters
// candidate trees through the type checker, and a random well-typed tree
// sampler.

#ifndef KGLF_TESTS_ORACLE_LF_ENUMERATOR_H_
#define KGLF_TESTS_ORACLE_LF_ENUMERATOR_H_

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "kglf/logical_form.h"

namespace kglf::oracle {

// Every well-typed tree of depth <= max_depth over `leaves` and `ops`,
// leaves included. Children are drawn from all well-typed trees of smaller
// depth; a tree is kept when TypeCheck accepts it. Each tree appears once.
std::vector<LogicalForm> EnumerateWellTyped(std::span<const ObjectRef> leaves,
                                            std::span<const Op> ops,
                                            int max_depth);

// Samples well-typed trees with depth in [1, max_depth] by growing a pool:
// random operators applied to random pool members, kept when they type
// check.
class RandomLfGenerator {
 public:
  RandomLfGenerator(uint64_t seed, int max_depth);

  LogicalForm Next();

 private:
  ObjectRef RandomLeaf();
  void Grow();

  std::mt19937_64 rng_;
  int max_depth_;
  std::vector<LogicalForm> pool_;
};

}  // namespace kglf::oracle

#endif  // KGLF_TESTS_ORACLE_LF_ENUMERATOR_H_
