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

#ifndef ARGROBUST_PERTURB_H_
#define ARGROBUST_PERTURB_H_

#include <array>
#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "argrobust/corpus.h"
#include "argrobust/labelalg.h"
#include "argrobust/labels.h"
#include "argrobust/metrics.h"

namespace argrobust {

enum class PerturbationTest { kT1, kT2, kT3 };

std::string_view PerturbationTestName(PerturbationTest test);
PerturbationTest ParsePerturbationTest(std::string_view text);

enum class SegmentOrder { kArgFirst, kNonArgFirst };
enum class OrderFilter { kArgFirst, kNonArgFirst, kBoth };

struct SegmentSpan {
  int start = 0;
  int end = 0;
  Label label = Label::kNon;
  std::vector<std::string> tokens;
};

// Two adjacent segments of one sentence: `arg` is PRO/CON, `non_arg` is a
// NON segment that is not punctuation-only.
struct SegmentPair {
  std::string id;  // "<sentence id>:<first start>-<second end>"
  std::string source_sentence_id;
  std::string topic;
  SegmentSpan arg;
  SegmentSpan non_arg;
  SegmentOrder order = SegmentOrder::kArgFirst;

  // Tokens of both segments in source order.
  std::vector<std::string> JoinedTokens() const;
};

std::vector<SegmentPair> ExtractAdjacentPairs(
    std::span<const LabeledSentence> sentences, OrderFilter filter);

enum class AnnFlag { kAnn, kNonAnn, kDiscard };

std::string_view AnnFlagName(AnnFlag flag);
AnnFlag ParseAnnFlag(std::string_view text);

// One line of the candidate / annotation / assembled-set JSONL. Assembled
// sets use the same record with every field final.
struct PerturbationRecord {
  std::string pair_id;
  PerturbationTest test = PerturbationTest::kT1;
  std::vector<std::string> before_tokens;
  std::optional<std::vector<std::string>> after_tokens;
  BinaryLabel gold_before = BinaryLabel::kArg;
  std::optional<BinaryLabel> gold_after;
  std::optional<AnnFlag> ann_flag;
  std::optional<std::vector<std::string>> completion_tokens;
  bool approved = false;

  // Extension fields carried through the round trip.
  std::string topic;
  std::vector<std::string> source_ids;
  // Index in before_tokens where the ARG segment starts: the announcing
  // prefix length for T1, 0 or the non-ARG length for T3, 0 for T2.
  std::optional<int> arg_offset;
};

std::vector<PerturbationRecord> ReadPerturbationRecords(std::istream& in);
void WritePerturbationRecords(std::span<const PerturbationRecord> records,
                              std::ostream& out);

// Checks one record against its test's gold-label and shape invariants.
// Returns human-readable violations; empty means valid. `final` additionally
// requires after_tokens and gold_after to be present.
std::vector<std::string> ValidateRecord(const PerturbationRecord& record,
                                        bool final);

inline constexpr std::array<std::string_view, 3> kT2Connector = {
    "and", "besides", ","};

// T1 candidates: NON_ARG-first pairs (announcing segment + ARG segment),
// with annotation fields left empty. Pairs in the other order are skipped.
std::vector<PerturbationRecord> GenerateT1Candidates(
    std::span<const SegmentPair> pairs);

struct T1Assembly {
  std::vector<PerturbationRecord> pairs;  // final records
  std::map<std::string, std::size_t> per_topic;
  std::size_t discarded = 0;
  std::size_t non_ann = 0;
  std::size_t unannotated = 0;
  std::vector<std::string> warnings;
};

// Per-topic target used in the assembly report.
inline constexpr std::size_t kT1TargetPerTopic = 100;

// ANN records become (prefix + ARG, ARG) / (prefix + completion, NON_ARG).
// Throws kInvalidArgument for ANN records lacking a completion or whose
// completion repeats the original ARG segment.
T1Assembly AssembleT1(std::span<const PerturbationRecord> annotated);

struct T2Options {
  std::size_t count_per_topic = 0;
  Seed seed;
  // ARG segments shorter than this (in tokens) are not sampled.
  std::size_t min_arg_tokens = 3;
};

// after = ARG segment + "and besides ," + pure non-ARG sentence of the same
// topic; before = the ARG segment. Both gold ARG. Throws kInsufficientData
// when a topic with ARG segments has no pure non-ARG sentence.
std::vector<PerturbationRecord> GenerateT2(
    std::span<const LabeledSentence> sentences, const T2Options& options);

struct T3Options {
  std::size_t count = 0;
  Seed seed;
  double balance_tolerance = 0.1;
};

struct T3Balance {
  std::size_t arg_first = 0;
  std::size_t non_arg_first = 0;
  std::map<std::string, std::size_t> per_topic;
};

T3Balance MeasureT3Balance(std::span<const PerturbationRecord> records);
bool WithinBalance(const T3Balance& balance, double tolerance);

// before = the adjacent pair in source order, after = the ARG segment alone.
// Sampling is stratified over (topic, order). Throws kInsufficientData when
// fewer than `count` pairs exist or the draw cannot meet the balance
// tolerance.
std::vector<PerturbationRecord> GenerateT3(
    std::span<const LabeledSentence> sentences, const T3Options& options);

// Prediction ids for the two sides of a pair.
std::string BeforeId(std::string_view pair_id);
std::string AfterId(std::string_view pair_id);

struct PerturbationEvaluation {
  PerturbationTest test = PerturbationTest::kT1;
  std::vector<int> runs;
  std::vector<PerturbationReport> per_run;
  ScoreDistribution before;
  ScoreDistribution after;
  ScoreDistribution delta_abs;
  // Report built from the mean accuracies.
  PerturbationReport of_means;
};

// Binary sentence accuracy on each side, per run. Token predictions are
// reduced via DeriveSentenceLabel and binarized.
PerturbationEvaluation EvaluatePerturbation(
    std::span<const PerturbationRecord> pairs, const PredictionSet& predictions,
    Seed seed);

}  // namespace argrobust

#endif  // ARGROBUST_PERTURB_H_
