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

#ifndef ARGROBUST_TESTS_FIXTURES_H_
#define ARGROBUST_TESTS_FIXTURES_H_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "argrobust/corpus.h"
#include "argrobust/labels.h"
#include "argrobust/subpop.h"

namespace argrobust::testing {

struct Composition {
  std::size_t pro_only = 658;
  std::size_t con_only = 621;
  std::size_t mixed = 3221;
  std::size_t non_arg = 3500;
};

// Synthetic AURC-8-shaped corpus: sentence categories are shuffled across the
// eight topics (1000 per topic for the default composition). Token strings are
// drawn from a fixed vocabulary so that duplicates are practically absent.
Corpus MakeSyntheticCorpus(std::uint64_t seed,
                           const Composition& composition = {});

// Vocabulary used by MakeSyntheticCorpus, with a deterministic embedding.
EmbeddingTable MakeSyntheticEmbeddings(int dimension, std::uint64_t seed);

// Text format: "<count> <dimension>" header, then one token per line.
void WriteEmbeddings(const EmbeddingTable& table, std::ostream& out);

LabeledSentence MakeSentence(std::string id, std::string topic,
                             std::vector<std::string> tokens,
                             std::vector<Label> labels);

// Labels from a compact string: 'P', 'C', 'N'.
std::vector<Label> L(std::string_view code);

// Tokens w0..w{n-1}.
std::vector<std::string> Words(std::size_t n, std::string_view stem = "w");

}  // namespace argrobust::testing

#endif  // ARGROBUST_TESTS_FIXTURES_H_
