// Copyright 2026 The ArgRobust Authors.
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

#ifndef ARGROBUST_SRC_SAMPLING_H_
#define ARGROBUST_SRC_SAMPLING_H_

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "argrobust/labelalg.h"

namespace argrobust::internal {

// splitmix64 stream. The bounded draw and the shuffle are spelled out here
// because the standard distributions are not portable across library
// implementations, and candidate files must be byte-identical everywhere.
class SeededStream {
 public:
  SeededStream(Seed seed, std::string_view purpose)
      : state_(KeyedRandom(seed, purpose)) {}

  std::uint64_t Next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound), bound > 0.
  std::uint64_t Below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = Next();
    } while (x >= limit);
    return x % bound;
  }

 private:
  std::uint64_t state_;
};

// Uniform sample of `k` distinct items, without replacement, in draw order
// (partial Fisher-Yates).
template <typename T>
std::vector<T> SampleWithoutReplacement(std::vector<T> items, std::size_t k,
                                        SeededStream& stream) {
  if (k > items.size()) k = items.size();
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = i + stream.Below(items.size() - i);
    std::swap(items[i], items[j]);
  }
  items.resize(k);
  return items;
}

}  // namespace argrobust::internal

#endif  // ARGROBUST_SRC_SAMPLING_H_
