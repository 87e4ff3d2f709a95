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

#include "argrobust/labelalg.h"

namespace argrobust {
namespace {

// FNV-1a over the key bytes.
std::uint64_t HashKey(std::string_view key) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : key) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// splitmix64 finalizer.
std::uint64_t Mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t KeyedRandom(Seed seed, std::string_view key) {
  return Mix(Mix(seed.value) ^ HashKey(key));
}

Label DeriveSentenceLabel(std::span<const Label> labels, Seed seed,
                          std::string_view key) {
  if (labels.empty()) {
    throw Error(ErrorCode::kEmptyInput,
                "cannot derive a sentence label from no tokens");
  }
  std::size_t pro = 0, con = 0;
  for (Label l : labels) {
    if (l == Label::kPro) ++pro;
    if (l == Label::kCon) ++con;
  }
  if (pro > con) return Label::kPro;
  if (con > pro) return Label::kCon;
  if (pro == 0) return Label::kNon;
  return (KeyedRandom(seed, key) & 1U) == 0 ? Label::kPro : Label::kCon;
}

std::vector<Label> BroadcastSentenceLabel(Label label, std::size_t n) {
  if (n == 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "cannot broadcast a label to zero tokens");
  }
  return std::vector<Label>(n, label);
}

bool IsMixedSegment(const LabeledSentence& sentence, PunctMode mode) {
  bool has_arg = false, has_non_arg = false;
  for (const Segment& seg : Segmentize(sentence)) {
    if (IsArgumentative(seg.label)) {
      has_arg = true;
    } else if (mode == PunctMode::kInclude || !seg.is_punct_only) {
      has_non_arg = true;
    }
  }
  return has_arg && has_non_arg;
}

}  // namespace argrobust
