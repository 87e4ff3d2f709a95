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

#ifndef ARGROBUST_METRICS_H_
#define ARGROBUST_METRICS_H_

#include <array>
#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "argrobust/corpus.h"
#include "argrobust/labelalg.h"
#include "argrobust/labels.h"

namespace argrobust {

enum class Granularity { kToken, kSentence };

// One run's output for one sentence. The payload is either per-token labels
// or a single sentence label, matching `granularity()`.
struct PredictionRecord {
  std::string sentence_id;
  int run = 0;
  std::variant<std::vector<Label>, Label> payload;

  Granularity granularity() const {
    return std::holds_alternative<Label>(payload) ? Granularity::kSentence
                                                  : Granularity::kToken;
  }
};

using RunPredictions = std::unordered_map<std::string, PredictionRecord>;

// All runs of one model, keyed by run id (ordered).
struct PredictionSet {
  std::map<int, RunPredictions> runs;

  void Add(PredictionRecord record);  // throws on a duplicate (run, id)
  std::vector<int> RunIds() const;
};

PredictionSet ParsePredictions(std::istream& in);
void WritePrediction(const PredictionRecord& record, std::ostream& out);

// Token labels for `sentence`: token predictions as-is (length checked),
// sentence predictions broadcast.
std::vector<Label> ResolveTokenLabels(const PredictionRecord& record,
                                      std::size_t n_tokens);
// Sentence label: sentence predictions as-is, token predictions aggregated
// with DeriveSentenceLabel keyed by the sentence id.
Label ResolveSentenceLabel(const PredictionRecord& record, Seed seed);

// Looks up the prediction for `id`; throws kMissingPrediction.
const PredictionRecord& RequirePrediction(const RunPredictions& predictions,
                                          const std::string& id);

struct ClassCounts {
  std::size_t true_positive = 0;
  std::size_t false_positive = 0;
  std::size_t false_negative = 0;
};

// F1 = 2PR/(P+R); 0 when P+R == 0; nullopt when the class never occurs in
// gold or prediction.
std::optional<double> F1FromCounts(const ClassCounts& counts);

template <typename L>
ClassCounts CountClass(std::span<const L> gold, std::span<const L> pred,
                       L cls) {
  if (gold.size() != pred.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                "gold and prediction lengths differ");
  }
  ClassCounts counts;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    const bool g = gold[i] == cls;
    const bool p = pred[i] == cls;
    if (g && p) ++counts.true_positive;
    if (!g && p) ++counts.false_positive;
    if (g && !p) ++counts.false_negative;
  }
  return counts;
}

template <typename L>
std::optional<double> PerClassF1(std::span<const L> gold,
                                 std::span<const L> pred, L cls) {
  return F1FromCounts(CountClass(gold, pred, cls));
}

// Unweighted mean of per-class F1 over the classes that occur in gold or
// prediction. Throws kEmptyInput when no class occurs at all.
template <typename L, std::size_t N>
double MacroF1(std::span<const L> gold, std::span<const L> pred,
               const std::array<L, N>& classes) {
  double sum = 0.0;
  int defined = 0;
  for (L cls : classes) {
    if (auto f1 = PerClassF1(gold, pred, cls)) {
      sum += *f1;
      ++defined;
    }
  }
  if (defined == 0) {
    throw Error(ErrorCode::kEmptyInput, "macro F1 over an empty evaluation set");
  }
  return sum / defined;
}

// Macro F1 over three-class labels or, for kBinary, over their binarization.
double MacroF1(std::span<const Label> gold, std::span<const Label> pred,
               LabelSpace space);

// Pools every token of every gold sentence. Sentence-granularity
// predictions are broadcast first.
double TokenF1(std::span<const LabeledSentence> gold,
               const RunPredictions& predictions, LabelSpace space);

// One unit per sentence; gold and token predictions are reduced with
// DeriveSentenceLabel under `seed`.
double SentenceF1(std::span<const LabeledSentence> gold,
                  const RunPredictions& predictions, LabelSpace space,
                  Seed seed);

// Share of positions in the gold segment's range where the prediction has
// the segment's label.
double SegmentOverlapRatio(const Segment& gold,
                           std::span<const Label> predicted);

// Over gold PRO/CON segments: share with overlap ratio > 0.5. Sentences
// without PRO/CON gold score 1.0 if nothing argumentative is predicted and
// 0.0 otherwise.
double SentenceSegmentF1(const LabeledSentence& sentence,
                         std::span<const Label> predicted);

// Mean sentence segment-F1. Per-sentence scores are computed in parallel and
// summed in corpus order, so the result does not depend on thread count.
double SegmentF1(std::span<const LabeledSentence> gold,
                 const RunPredictions& predictions);
// Single-threaded reference for SegmentF1.
double SegmentF1Serial(std::span<const LabeledSentence> gold,
                       const RunPredictions& predictions);

double Accuracy(std::span<const BinaryLabel> gold,
                std::span<const BinaryLabel> predicted);

struct PerturbationReport {
  double acc_before = 0.0;
  double acc_after = 0.0;
  double delta_abs = 0.0;
  // Percentage of acc_before; nullopt when acc_before == 0.
  std::optional<double> delta_rel;
};

PerturbationReport DeltaAcc(double before, double after);

struct ScoreDistribution {
  std::string metric_name;
  std::vector<double> values;
  double mean = 0.0;
  double std = 0.0;  // sample (n-1) standard deviation, 0 for one value
};

ScoreDistribution AggregateRuns(std::span<const double> values,
                                std::string metric_name = {});

}  // namespace argrobust

#endif  // ARGROBUST_METRICS_H_
