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

#include "fixtures.h"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <random>

namespace argrobust::testing {
namespace {

constexpr int kVocabulary = 600;

std::string VocabWord(std::uint64_t i) { return "tok" + std::to_string(i); }

// Raw engine output only; the standard distributions differ across libraries.
std::size_t Draw(std::mt19937_64& rng, std::size_t bound) {
  return static_cast<std::size_t>(rng() % bound);
}

enum class Kind { kPro, kCon, kMixed, kNon };

void AppendRun(std::mt19937_64& rng, std::size_t len, Label label,
               LabeledSentence& s) {
  for (std::size_t i = 0; i < len; ++i) {
    s.tokens.push_back(VocabWord(Draw(rng, kVocabulary)));
    s.labels.push_back(label);
  }
}

}  // namespace

Corpus MakeSyntheticCorpus(std::uint64_t seed, const Composition& c) {
  std::vector<Kind> kinds;
  kinds.insert(kinds.end(), c.pro_only, Kind::kPro);
  kinds.insert(kinds.end(), c.con_only, Kind::kCon);
  kinds.insert(kinds.end(), c.mixed, Kind::kMixed);
  kinds.insert(kinds.end(), c.non_arg, Kind::kNon);
  std::mt19937_64 rng(seed);
  for (std::size_t i = kinds.size(); i > 1; --i) {
    std::swap(kinds[i - 1], kinds[Draw(rng, i)]);
  }

  const TopicRegistry topics = TopicRegistry::Aurc8();
  const std::size_t per_topic =
      (kinds.size() + topics.size() - 1) / topics.size();
  Corpus corpus(topics);
  for (std::size_t i = 0; i < kinds.size(); ++i) {
    LabeledSentence s;
    const int topic = static_cast<int>(std::min<std::size_t>(
        i / per_topic, static_cast<std::size_t>(topics.size() - 1)));
    s.topic = topics.Name(topic);
    s.id = "s" + std::to_string(topic) + "-" + std::to_string(i % per_topic);
    const Label stance = Draw(rng, 2) == 0 ? Label::kPro : Label::kCon;
    switch (kinds[i]) {
      case Kind::kPro:
        AppendRun(rng, 5 + Draw(rng, 10), Label::kPro, s);
        break;
      case Kind::kCon:
        AppendRun(rng, 5 + Draw(rng, 10), Label::kCon, s);
        break;
      case Kind::kMixed:
        switch (Draw(rng, 4)) {
          case 0:  // announcing prefix
            AppendRun(rng, 2 + Draw(rng, 4), Label::kNon, s);
            AppendRun(rng, 4 + Draw(rng, 8), stance, s);
            break;
          case 1:  // trailing context
            AppendRun(rng, 4 + Draw(rng, 8), stance, s);
            AppendRun(rng, 2 + Draw(rng, 6), Label::kNon, s);
            break;
          case 2:
            AppendRun(rng, 2 + Draw(rng, 3), Label::kNon, s);
            AppendRun(rng, 3 + Draw(rng, 6), stance, s);
            AppendRun(rng, 2 + Draw(rng, 4), Label::kNon, s);
            break;
          default:  // both stances
            AppendRun(rng, 3 + Draw(rng, 5), Label::kPro, s);
            AppendRun(rng, 3 + Draw(rng, 5), Label::kCon, s);
            break;
        }
        break;
      case Kind::kNon:
        AppendRun(rng, 4 + Draw(rng, 14), Label::kNon, s);
        break;
    }
    s.tokens.push_back(".");
    s.labels.push_back(Label::kNon);
    corpus.Add(std::move(s));
  }
  return corpus;
}

EmbeddingTable MakeSyntheticEmbeddings(int dimension, std::uint64_t seed) {
  EmbeddingTable table(dimension);
  std::mt19937_64 rng(seed);
  std::vector<float> v(dimension);
  // A fifth of the vocabulary is left out to exercise OOV handling.
  for (int i = 0; i < kVocabulary; ++i) {
    for (auto& x : v) {
      x = static_cast<float>(static_cast<double>(rng() >> 11) * 0x1.0p-53 -
                             0.5);
    }
    if (i % 5 != 4) table.Add(VocabWord(i), v);
  }
  return table;
}

void WriteEmbeddings(const EmbeddingTable& table, std::ostream& out) {
  std::vector<std::string> tokens;
  for (int i = 0; i < kVocabulary; ++i) {
    if (table.Find(VocabWord(i))) tokens.push_back(VocabWord(i));
  }
  out << tokens.size() << ' ' << table.dimension() << '\n';
  char buf[32];
  for (const auto& t : tokens) {
    out << t;
    const float* v = table.Find(t);
    for (int d = 0; d < table.dimension(); ++d) {
      std::snprintf(buf, sizeof(buf), " %.9g", v[d]);
      out << buf;
    }
    out << '\n';
  }
}

LabeledSentence MakeSentence(std::string id, std::string topic,
                             std::vector<std::string> tokens,
                             std::vector<Label> labels) {
  LabeledSentence s;
  s.id = std::move(id);
  s.topic = std::move(topic);
  s.tokens = std::move(tokens);
  s.labels = std::move(labels);
  return s;
}

std::vector<Label> L(std::string_view code) {
  std::vector<Label> out;
  for (char c : code) {
    out.push_back(c == 'P' ? Label::kPro : c == 'C' ? Label::kCon : Label::kNon);
  }
  return out;
}

std::vector<std::string> Words(std::size_t n, std::string_view stem) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::string(stem) + std::to_string(i));
  return out;
}

}  // namespace argrobust::testing
