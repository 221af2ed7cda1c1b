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

#include "kglf/random.h"

#include <unordered_map>

namespace kglf {

uint64_t UniformBelow(std::mt19937_64 &rng, uint64_t n) {
  const uint64_t threshold = (0 - n) % n;
  while (true) {
    uint64_t r = rng();
    if (r >= threshold) return r % n;
  }
}

std::vector<uint32_t> SampleDistinct(std::mt19937_64 &rng, uint32_t n, size_t k) {
  // Slots never swapped hold their own index and are not stored.
  std::unordered_map<uint32_t, uint32_t> slots;
  auto at = [&](uint32_t i) {
    auto it = slots.find(i);
    return it == slots.end() ? i : it->second;
  };
  std::vector<uint32_t> out;
  out.reserve(k);
  for (uint32_t i = 0; i < k; ++i) {
    uint32_t j = i + static_cast<uint32_t>(UniformBelow(rng, n - i));
    uint32_t vi = at(i);
    uint32_t vj = at(j);
    slots[i] = vj;
    slots[j] = vi;
    out.push_back(vj);
  }
  return out;
}

}  // namespace kglf
