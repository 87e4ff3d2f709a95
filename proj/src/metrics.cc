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

#include "argrobust/metrics.h"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <string>

#include "json.hpp"

namespace argrobust {
namespace {

using nlohmann::json;

// Checks that every gold sentence has a prediction of usable shape. Runs
// before any parallel region so that the kernels themselves cannot throw.
std::vector<const PredictionRecord*> GatherPredictions(
    std::span<const LabeledSentence> gold, const RunPredictions& predictions) {
  std::vector<const PredictionRecord*> out;
  out.reserve(gold.size());
  for (const auto& s : gold) {
    const PredictionRecord& record = RequirePrediction(predictions, s.id);
    if (const auto* tokens = std::get_if<std::vector<Label>>(&record.payload)) {
      if (tokens->size() != s.size()) {
        throw Error(ErrorCode::kLengthMismatch,
                    "prediction for '" + s.id + "' has " +
                        std::to_string(tokens->size()) + " labels, gold has " +
                        std::to_string(s.size()) + " tokens");
      }
    }
    out.push_back(&record);
  }
  return out;
}

std::vector<BinaryLabel> BinarizeAll(std::span<const Label> labels) {
  std::vector<BinaryLabel> out;
  out.reserve(labels.size());
  for (Label l : labels) out.push_back(Binarize(l));
  return out;
}

// Token view of a record without copying token payloads.
std::span<const Label> TokenView(const PredictionRecord& record,
                                 std::vector<Label>& scratch,
                                 std::size_t n_tokens) {
  if (const auto* tokens = std::get_if<std::vector<Label>>(&record.payload)) {
    return *tokens;
  }
  scratch.assign(n_tokens, std::get<Label>(record.payload));
  return scratch;
}

}  // namespace

void PredictionSet::Add(PredictionRecord record) {
  auto& run = runs[record.run];
  const std::string id = record.sentence_id;
  if (!run.emplace(id, std::move(record)).second) {
    throw Error(ErrorCode::kDuplicateId,
                "duplicate prediction for '" + id + "'");
  }
}

std::vector<int> PredictionSet::RunIds() const {
  std::vector<int> ids;
  for (const auto& [id, unused] : runs) ids.push_back(id);
  return ids;
}

PredictionSet ParsePredictions(std::istream& in) {
  PredictionSet set;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    try {
      json obj;
      try {
        obj = json::parse(line);
      } catch (const json::exception& e) {
        throw Error(ErrorCode::kMalformedJson, e.what());
      }
      if (!obj.is_object() || !obj.contains("sentence_id") ||
          !obj["sentence_id"].is_string() || !obj.contains("granularity") ||
          !obj["granularity"].is_string()) {
        throw Error(ErrorCode::kMalformedJson,
                    "prediction needs string fields 'sentence_id' and "
                    "'granularity'");
      }
      PredictionRecord record;
      record.sentence_id = obj["sentence_id"].get<std::string>();
      if (obj.contains("run")) {
        if (!obj["run"].is_number_integer()) {
          throw Error(ErrorCode::kMalformedJson, "'run' must be an integer");
        }
        record.run = obj["run"].get<int>();
      }
      const std::string granularity = obj["granularity"].get<std::string>();
      if (granularity == "token") {
        if (!obj.contains("labels") || !obj["labels"].is_array() ||
            obj["labels"].empty()) {
          throw Error(ErrorCode::kMalformedJson,
                      "token prediction needs a non-empty 'labels' array");
        }
        std::vector<Label> labels;
        for (const auto& l : obj["labels"]) {
          if (!l.is_string()) {
            throw Error(ErrorCode::kMalformedJson, "label is not a string");
          }
          labels.push_back(ParseLabel(l.get<std::string>()));
        }
        record.payload = std::move(labels);
      } else if (granularity == "sentence") {
        if (!obj.contains("label") || !obj["label"].is_string()) {
          throw Error(ErrorCode::kMalformedJson,
                      "sentence prediction needs a string 'label'");
        }
        record.payload = ParseLabel(obj["label"].get<std::string>());
      } else {
        throw Error(ErrorCode::kMalformedJson,
                    "unknown granularity '" + granularity + "'");
      }
      set.Add(std::move(record));
    } catch (const Error& e) {
      throw Error(e.code(),
                  "predictions line " + std::to_string(line_no) + ": " +
                      e.what());
    }
  }
  return set;
}

void WritePrediction(const PredictionRecord& record, std::ostream& out) {
  nlohmann::ordered_json obj = {{"sentence_id", record.sentence_id}, {"run", record.run}};
  if (const auto* tokens = std::get_if<std::vector<Label>>(&record.payload)) {
    obj["granularity"] = "token";
    nlohmann::ordered_json labels = nlohmann::ordered_json::array();
    for (Label l : *tokens) labels.push_back(LabelName(l));
    obj["labels"] = std::move(labels);
  } else {
    obj["granularity"] = "sentence";
    obj["label"] = LabelName(std::get<Label>(record.payload));
  }
  out << obj.dump() << '\n';
}

std::vector<Label> ResolveTokenLabels(const PredictionRecord& record,
                                      std::size_t n_tokens) {
  if (const auto* tokens = std::get_if<std::vector<Label>>(&record.payload)) {
    if (tokens->size() != n_tokens) {
      throw Error(ErrorCode::kLengthMismatch,
                  "prediction for '" + record.sentence_id + "' has " +
                      std::to_string(tokens->size()) + " labels, expected " +
                      std::to_string(n_tokens));
    }
    return *tokens;
  }
  return BroadcastSentenceLabel(std::get<Label>(record.payload), n_tokens);
}

Label ResolveSentenceLabel(const PredictionRecord& record, Seed seed) {
  if (const auto* label = std::get_if<Label>(&record.payload)) return *label;
  return DeriveSentenceLabel(std::get<std::vector<Label>>(record.payload),
                             seed, record.sentence_id);
}

const PredictionRecord& RequirePrediction(const RunPredictions& predictions,
                                          const std::string& id) {
  auto it = predictions.find(id);
  if (it == predictions.end()) {
    throw Error(ErrorCode::kMissingPrediction,
                "no prediction for sentence '" + id + "'");
  }
  return it->second;
}

std::optional<double> F1FromCounts(const ClassCounts& counts) {
  const std::size_t tp = counts.true_positive;
  const std::size_t fp = counts.false_positive;
  const std::size_t fn = counts.false_negative;
  if (tp + fp + fn == 0) return std::nullopt;
  const double precision = tp + fp == 0 ? 0.0 : double(tp) / double(tp + fp);
  const double recall = tp + fn == 0 ? 0.0 : double(tp) / double(tp + fn);
  if (precision + recall == 0.0) return 0.0;
  return 2.0 * precision * recall / (precision + recall);
}

double MacroF1(std::span<const Label> gold, std::span<const Label> pred,
               LabelSpace space) {
  if (space == LabelSpace::kThreeClass) {
    return MacroF1<Label>(gold, pred, kAllLabels);
  }
  const auto g = BinarizeAll(gold);
  const auto p = BinarizeAll(pred);
  return MacroF1<BinaryLabel>(g, p, kAllBinaryLabels);
}

double TokenF1(std::span<const LabeledSentence> gold,
               const RunPredictions& predictions, LabelSpace space) {
  const auto records = GatherPredictions(gold, predictions);
  std::vector<Label> gold_tokens, pred_tokens, scratch;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    gold_tokens.insert(gold_tokens.end(), gold[i].labels.begin(),
                       gold[i].labels.end());
    auto view = TokenView(*records[i], scratch, gold[i].size());
    pred_tokens.insert(pred_tokens.end(), view.begin(), view.end());
  }
  return MacroF1(gold_tokens, pred_tokens, space);
}

double SentenceF1(std::span<const LabeledSentence> gold,
                  const RunPredictions& predictions, LabelSpace space,
                  Seed seed) {
  const auto records = GatherPredictions(gold, predictions);
  std::vector<Label> gold_labels, pred_labels;
  gold_labels.reserve(gold.size());
  pred_labels.reserve(gold.size());
  for (std::size_t i = 0; i < gold.size(); ++i) {
    gold_labels.push_back(DeriveSentenceLabel(gold[i].labels, seed, gold[i].id));
    pred_labels.push_back(ResolveSentenceLabel(*records[i], seed));
  }
  return MacroF1(gold_labels, pred_labels, space);
}

double SegmentOverlapRatio(const Segment& gold,
                           std::span<const Label> predicted) {
  if (gold.length() <= 0) return 0.0;
  int matches = 0;
  for (int i = gold.start; i < gold.end; ++i) {
    if (predicted[i] == gold.label) ++matches;
  }
  return static_cast<double>(matches) / gold.length();
}

double SentenceSegmentF1(const LabeledSentence& sentence,
                         std::span<const Label> predicted) {
  if (predicted.size() != sentence.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                "prediction length differs from sentence '" + sentence.id +
                    "'");
  }
  int total = 0, correct = 0;
  for (const Segment& seg : Segmentize(sentence)) {
    if (!IsArgumentative(seg.label)) continue;
    ++total;
    if (SegmentOverlapRatio(seg, predicted) > 0.5) ++correct;
  }
  if (total > 0) return static_cast<double>(correct) / total;
  for (Label l : predicted) {
    if (IsArgumentative(l)) return 0.0;
  }
  return 1.0;
}

double SegmentF1(std::span<const LabeledSentence> gold,
                 const RunPredictions& predictions) {
  const auto records = GatherPredictions(gold, predictions);
  if (gold.empty()) {
    throw Error(ErrorCode::kEmptyInput, "segment F1 over no sentences");
  }
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(gold.size());
  std::vector<double> scores(gold.size());
#pragma omp parallel
  {
    std::vector<Label> scratch;
#pragma omp for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      scores[i] = SentenceSegmentF1(
          gold[i], TokenView(*records[i], scratch, gold[i].size()));
    }
  }
  double sum = 0.0;
  for (double s : scores) sum += s;
  return sum / static_cast<double>(scores.size());
}

double SegmentF1Serial(std::span<const LabeledSentence> gold,
                       const RunPredictions& predictions) {
  const auto records = GatherPredictions(gold, predictions);
  if (gold.empty()) {
    throw Error(ErrorCode::kEmptyInput, "segment F1 over no sentences");
  }
  std::vector<Label> scratch;
  double sum = 0.0;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    sum += SentenceSegmentF1(gold[i],
                             TokenView(*records[i], scratch, gold[i].size()));
  }
  return sum / static_cast<double>(gold.size());
}

double Accuracy(std::span<const BinaryLabel> gold,
                std::span<const BinaryLabel> predicted) {
  if (gold.size() != predicted.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                "gold and prediction counts differ");
  }
  if (gold.empty()) {
    throw Error(ErrorCode::kEmptyInput, "accuracy over no examples");
  }
  std::size_t correct = 0;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    if (gold[i] == predicted[i]) ++correct;
  }
  return static_cast<double>(correct) / static_cast<double>(gold.size());
}

PerturbationReport DeltaAcc(double before, double after) {
  PerturbationReport report;
  report.acc_before = before;
  report.acc_after = after;
  report.delta_abs = after - before;
  if (before > 0.0) report.delta_rel = 100.0 * report.delta_abs / before;
  return report;
}

ScoreDistribution AggregateRuns(std::span<const double> values,
                                std::string metric_name) {
  if (values.empty()) {
    throw Error(ErrorCode::kEmptyInput, "cannot aggregate zero runs");
  }
  ScoreDistribution d;
  d.metric_name = std::move(metric_name);
  d.values.assign(values.begin(), values.end());
  if (std::all_of(values.begin(), values.end(),
                  [&](double v) { return v == values.front(); })) {
    d.mean = values.front();
    return d;
  }
  double sum = 0.0;
  for (double v : values) sum += v;
  d.mean = sum / static_cast<double>(values.size());
  {
    double ss = 0.0;
    for (double v : values) ss += (v - d.mean) * (v - d.mean);
    d.std = std::sqrt(ss / static_cast<double>(values.size() - 1));
  }
  return d;
}

}  // namespace argrobust
