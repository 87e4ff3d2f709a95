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

#ifndef ARGROBUST_LABELALG_H_
#define ARGROBUST_LABELALG_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "argrobust/corpus.h"
#include "argrobust/labels.h"

namespace argrobust {

struct Seed {
  std::uint64_t value = 0;
};

// Stateless keyed generator: the same (seed, key) always yields the same
// 64-bit word, independent of call order or thread.
std::uint64_t KeyedRandom(Seed seed, std::string_view key);

// Token labels -> one sentence label. NON only when no PRO/CON is present;
// otherwise the majority of PRO vs CON tokens, with exact ties resolved by
// KeyedRandom(seed, key). Throws on an empty label list.
Label DeriveSentenceLabel(std::span<const Label> labels, Seed seed,
                          std::string_view key);

inline BinaryLabel Binarize(Label label) {
  return label == Label::kNon ? BinaryLabel::kNonArg : BinaryLabel::kArg;
}

// n copies of `label`; throws for n == 0.
std::vector<Label> BroadcastSentenceLabel(Label label, std::size_t n);

enum class PunctMode {
  kIgnore,   // punctuation-only NON segments do not count as non-ARG
  kInclude,  // every NON segment counts
};

// True iff the sentence has both an ARG (PRO/CON) segment and a non-ARG
// segment.
bool IsMixedSegment(const LabeledSentence& sentence,
                    PunctMode mode = PunctMode::kIgnore);

}  // namespace argrobust

#endif  // ARGROBUST_LABELALG_H_
