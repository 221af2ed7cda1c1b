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

#ifndef KGLF_RANDOM_H_
#define KGLF_RANDOM_H_

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace kglf {

// Uniform integer in [0, n), n > 0. Rejection sampling keeps sequences
// identical across standard libraries, unlike std::uniform_int_distribution.
uint64_t UniformBelow(std::mt19937_64 &rng, uint64_t n);

// `k` distinct integers from [0, n) in draw order (partial Fisher-Yates).
// Requires k <= n.
std::vector<uint32_t> SampleDistinct(std::mt19937_64 &rng, uint32_t n, size_t k);

}  // namespace kglf

#endif  // KGLF_RANDOM_H_
