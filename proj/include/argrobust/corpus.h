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

#ifndef ARGROBUST_CORPUS_H_
#define ARGROBUST_CORPUS_H_

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "argrobust/labels.h"

namespace argrobust {

// Ordered list of topic names. A topic's index in the registry drives the
// in-domain and cross-domain split rules.
class TopicRegistry {
 public:
  TopicRegistry() = default;
  explicit TopicRegistry(std::vector<std::string> names);

  // The eight AURC-8 topics in their canonical order.
  static TopicRegistry Aurc8();

  std::optional<int> IndexOf(std::string_view name) const;
  const std::string& Name(int index) const { return names_.at(index); }
  int size() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }

 private:
  std::vector<std::string> names_;
};

struct LabeledSentence {
  std::string id;
  std::string topic;
  int topic_index = 0;
  // 0-based order within the topic, in file order.
  int position = 0;
  std::vector<std::string> tokens;
  std::vector<Label> labels;

  std::size_t size() const { return tokens.size(); }
};

// Maximal run [start, end) of identically labeled tokens.
struct Segment {
  Label label = Label::kNon;
  int start = 0;
  int end = 0;
  bool is_punct_only = false;

  int length() const { return end - start; }
  bool operator==(const Segment&) const = default;
};

class Corpus {
 public:
  Corpus() : topics_(TopicRegistry::Aurc8()) {}
  explicit Corpus(TopicRegistry topics) : topics_(std::move(topics)) {}

  // Appends a sentence and sets its topic index. The per-topic position is
  // assigned in insertion order unless `assign_position` is false, in which
  // case the sentence's own position is kept. Throws on a duplicate id, an
  // unknown topic, or a malformed sentence.
  const LabeledSentence& Add(LabeledSentence sentence,
                             bool assign_position = true);

  const LabeledSentence* Find(std::string_view id) const;

  const TopicRegistry& topics() const { return topics_; }
  const std::vector<LabeledSentence>& sentences() const { return sentences_; }
  std::size_t size() const { return sentences_.size(); }
  bool empty() const { return sentences_.empty(); }

 private:
  TopicRegistry topics_;
  std::vector<LabeledSentence> sentences_;
  std::unordered_map<std::string, std::size_t> by_id_;
  std::vector<int> next_position_;
};

struct ParseIssue {
  std::size_t line = 0;  // 1-based
  ErrorCode code = ErrorCode::kMalformedJson;
  std::string message;
};

struct ParseOptions {
  // Strict parsing throws on the first bad line; otherwise bad lines are
  // skipped and reported.
  bool strict = true;
};

struct CorpusParseResult {
  Corpus corpus;
  std::vector<ParseIssue> errors;
  std::vector<std::string> warnings;
};

// Reads canonical JSONL: one {"id","topic","tokens","labels"} object per
// line. Blank lines are ignored.
CorpusParseResult ParseCorpus(std::istream& in, const TopicRegistry& topics,
                              const ParseOptions& options = {});
Corpus ParseCorpusOrThrow(std::istream& in,
                          const TopicRegistry& topics = TopicRegistry::Aurc8());

void WriteCorpus(const Corpus& corpus, std::ostream& out);

// Column mapping for token-per-row TSV input. Consecutive rows sharing an id
// form one sentence.
struct TsvColumnMapping {
  std::string id_column = "sentence_id";
  std::string topic_column = "topic";
  std::string token_column = "token";
  std::string label_column = "label";
  // Upstream label spellings mapped onto PRO/CON/NON; unmapped values are
  // parsed as canonical labels.
  std::map<std::string, std::string> label_aliases;
};

// The first non-empty row is a header naming the columns.
CorpusParseResult ParseTsvCorpus(std::istream& in, const TopicRegistry& topics,
                                 const TsvColumnMapping& mapping,
                                 const ParseOptions& options = {});

// True iff every code point of the token is in a Unicode punctuation
// category (Pc, Pd, Ps, Pe, Pi, Pf, Po). Empty tokens are not punctuation.
bool IsPunctuationToken(std::string_view token);

std::vector<Segment> Segmentize(const LabeledSentence& sentence);

enum class SplitScheme { kInDomain, kCrossDomain };
enum class Split { kTrain, kDev, kTest };

std::string_view SplitSchemeName(SplitScheme scheme);
SplitScheme ParseSplitScheme(std::string_view text);
std::string_view SplitName(Split split);

struct SplitAssignment {
  SplitScheme scheme = SplitScheme::kInDomain;
  std::map<std::string, Split> map;
  std::vector<std::string> warnings;

  std::optional<Split> Of(std::string_view id) const;
  bool operator==(const SplitAssignment& other) const {
    return scheme == other.scheme && map == other.map;
  }
};

// In-domain: topics 0-5 split per topic by position at floor(0.7n) and
// floor(0.8n); later topics stay unassigned. Cross-domain: topics 0-4 train,
// topic 5 dev, the rest test.
SplitAssignment AssignSplits(const Corpus& corpus, SplitScheme scheme);

struct DuplicateRemoval {
  std::string dropped_id;
  std::string kept_id;
};

struct DedupResult {
  Corpus corpus;
  SplitAssignment assignment;
  std::vector<DuplicateRemoval> removals;
};

// Drops assigned sentences whose token sequence repeats an earlier assigned
// sentence, earliest meaning (topic index, position) order. Unassigned
// sentences pass through untouched.
DedupResult Deduplicate(const Corpus& corpus,
                        const SplitAssignment& assignment);

struct CorpusStats {
  std::size_t total = 0;
  std::size_t arg = 0;
  std::size_t non_arg = 0;
  std::size_t pro_only = 0;
  std::size_t con_only = 0;
  std::size_t mixed = 0;

  // Percentages of total for arg/non_arg and of arg for the breakdown; 0 when
  // the denominator is 0.
  double arg_pct() const;
  double non_arg_pct() const;
  double pro_only_pct() const;
  double con_only_pct() const;
  double mixed_pct() const;
};

CorpusStats ComputeCorpusStats(std::span<const LabeledSentence> sentences);

// Sentences of `corpus` whose assignment equals `split`, in corpus order.
std::vector<LabeledSentence> SelectSplit(const Corpus& corpus,
                                         const SplitAssignment& assignment,
                                         Split split);

}  // namespace argrobust

#endif  // ARGROBUST_CORPUS_H_
