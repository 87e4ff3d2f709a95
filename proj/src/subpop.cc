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

#include "argrobust/subpop.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <numeric>
#include <sstream>

namespace argrobust {
namespace {

std::vector<std::string_view> SplitWhitespace(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) fields.push_back(line.substr(start, i - start));
  }
  return fields;
}

template <typename T>
T ParseNumber(std::string_view text, std::size_t line_no) {
  T value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::kMalformedJson,
                "embedding line " + std::to_string(line_no) +
                    ": cannot parse number '" + std::string(text) + "'");
  }
  return value;
}

std::pair<BinaryLabel, BinaryLabel> GoldAndPredicted(
    const LabeledSentence& gold, const RunPredictions& predictions,
    Seed seed) {
  const PredictionRecord& record = RequirePrediction(predictions, gold.id);
  if (const auto* tokens = std::get_if<std::vector<Label>>(&record.payload)) {
    if (tokens->size() != gold.size()) {
      throw Error(ErrorCode::kLengthMismatch,
                  "prediction for '" + gold.id + "' has " +
                      std::to_string(tokens->size()) + " labels, gold has " +
                      std::to_string(gold.size()) + " tokens");
    }
  }
  return {Binarize(DeriveSentenceLabel(gold.labels, seed, gold.id)),
          Binarize(ResolveSentenceLabel(record, seed))};
}

}  // namespace

EmbeddingTable EmbeddingTable::Parse(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!SplitWhitespace(line).empty()) break;
  }
  if (line_no == 0 || SplitWhitespace(line).empty()) {
    throw Error(ErrorCode::kEmptyInput, "embedding file is empty");
  }
  if (!line.empty() && line.back() == '\r') line.pop_back();
  const auto header = SplitWhitespace(line);
  if (header.size() != 2) {
    throw Error(ErrorCode::kMalformedJson,
                "embedding header must be '<count> <dimension>'");
  }
  const auto count = ParseNumber<std::size_t>(header[0], line_no);
  const auto dimension = ParseNumber<int>(header[1], line_no);
  if (dimension <= 0) {
    throw Error(ErrorCode::kMalformedJson, "embedding dimension must be > 0");
  }
  EmbeddingTable table(dimension);
  table.data_.reserve(count * static_cast<std::size_t>(dimension));
  std::vector<float> vec(dimension);
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto fields = SplitWhitespace(line);
    if (fields.empty()) continue;
    if (fields.size() != static_cast<std::size_t>(dimension) + 1) {
      throw Error(ErrorCode::kLengthMismatch,
                  "embedding line " + std::to_string(line_no) + " has " +
                      std::to_string(fields.size() - 1) +
                      " components, expected " + std::to_string(dimension));
    }
    for (int d = 0; d < dimension; ++d) {
      vec[d] = ParseNumber<float>(fields[d + 1], line_no);
    }
    table.Add(std::string(fields[0]), vec);
  }
  if (table.size() != count) {
    throw Error(ErrorCode::kLengthMismatch,
                "embedding header declares " + std::to_string(count) +
                    " vectors, file has " + std::to_string(table.size()));
  }
  return table;
}

void EmbeddingTable::Add(std::string token, std::span<const float> vector) {
  if (static_cast<int>(vector.size()) != dimension_) {
    throw Error(ErrorCode::kLengthMismatch,
                "vector for '" + token + "' has dimension " +
                    std::to_string(vector.size()) + ", table has " +
                    std::to_string(dimension_));
  }
  const std::size_t slot = index_.size();
  if (!index_.emplace(token, slot).second) {
    throw Error(ErrorCode::kDuplicateId,
                "token '" + token + "' appears twice in the embedding table");
  }
  data_.insert(data_.end(), vector.begin(), vector.end());
}

const float* EmbeddingTable::Find(std::string_view token) const {
  auto it = index_.find(std::string(token));
  if (it == index_.end()) return nullptr;
  return data_.data() + it->second * static_cast<std::size_t>(dimension_);
}

OovMode ParseOovMode(std::string_view text) {
  if (text == "skip") return OovMode::kSkip;
  if (text == "zero") return OovMode::kZero;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown OOV mode '" + std::string(text) + "'");
}

SentenceVector ComputeSentenceVector(std::span<const std::string> tokens,
                                     const EmbeddingTable& table,
                                     OovMode mode) {
  if (table.empty()) {
    throw Error(ErrorCode::kEmptyInput, "embedding table is empty");
  }
  SentenceVector out;
  out.values.assign(table.dimension(), 0.0);
  for (const auto& token : tokens) {
    const float* v = table.Find(token);
    if (v == nullptr) continue;
    ++out.found;
    for (int d = 0; d < table.dimension(); ++d) out.values[d] += v[d];
  }
  if (out.found == 0) {
    out.flagged = true;
    return out;
  }
  const double denom = static_cast<double>(
      mode == OovMode::kSkip ? out.found : tokens.size());
  for (double& x : out.values) x /= denom;
  return out;
}

std::optional<double> CosineSimilarity(std::span<const double> u,
                                       std::span<const double> v) {
  if (u.size() != v.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                "cosine similarity of vectors with different dimensions");
  }
  double dot = 0.0, uu = 0.0, vv = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    dot += u[i] * v[i];
    uu += u[i] * u[i];
    vv += v[i] * v[i];
  }
  if (uu == 0.0 || vv == 0.0) return std::nullopt;
  return std::clamp(dot / (std::sqrt(uu) * std::sqrt(vv)), -1.0, 1.0);
}

SentenceMatrix::SentenceMatrix(std::span<const SentenceVector> vectors,
                               int dimension)
    : dimension_(dimension) {
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    const auto& values = vectors[i].values;
    if (static_cast<int>(values.size()) != dimension) {
      throw Error(ErrorCode::kLengthMismatch,
                  "sentence vector has the wrong dimension");
    }
    double norm = 0.0;
    for (double x : values) norm += x * x;
    if (norm == 0.0) {
      ++zero_rows_;
      continue;
    }
    norm = std::sqrt(norm);
    for (double x : values) data_.push_back(x / norm);
    source_index_.push_back(i);
  }
}

namespace {

std::optional<Neighbor> ScanRow(std::span<const double> query,
                                const SentenceMatrix& train) {
  std::optional<Neighbor> best;
  for (std::size_t r = 0; r < train.rows(); ++r) {
    const auto row = train.Row(r);
    double dot = 0.0;
    for (std::size_t d = 0; d < row.size(); ++d) dot += query[d] * row[d];
    dot = std::clamp(dot, -1.0, 1.0);
    if (!best || dot > best->similarity) {
      best = Neighbor{train.SourceIndex(r), dot};
    }
  }
  return best;
}

}  // namespace

std::vector<std::optional<Neighbor>> NearestNeighbors(
    const SentenceMatrix& queries, const SentenceMatrix& train) {
  if (queries.dimension() != train.dimension()) {
    throw Error(ErrorCode::kLengthMismatch, "matrix dimensions differ");
  }
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(queries.rows());
  std::vector<std::optional<Neighbor>> out(queries.rows());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t q = 0; q < n; ++q) {
    out[q] = ScanRow(queries.Row(q), train);
  }
  return out;
}

std::vector<std::optional<Neighbor>> NearestNeighborsSerial(
    const SentenceMatrix& queries, const SentenceMatrix& train) {
  if (queries.dimension() != train.dimension()) {
    throw Error(ErrorCode::kLengthMismatch, "matrix dimensions differ");
  }
  std::vector<std::optional<Neighbor>> out;
  out.reserve(queries.rows());
  for (std::size_t q = 0; q < queries.rows(); ++q) {
    out.push_back(ScanRow(queries.Row(q), train));
  }
  return out;
}

std::string_view SubpopTestName(SubpopTest test) {
  switch (test) {
    case SubpopTest::kT4:
      return "T4";
    case SubpopTest::kT5:
      return "T5";
    case SubpopTest::kT6:
      return "T6";
  }
  return "?";
}

SubpopTest ParseSubpopTest(std::string_view text) {
  if (text == "T4" || text == "t4") return SubpopTest::kT4;
  if (text == "T5" || text == "t5") return SubpopTest::kT5;
  if (text == "T6" || text == "t6") return SubpopTest::kT6;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown subpopulation test '" + std::string(text) + "'");
}

SimilaritySets BuildSimilaritySets(std::span<const LabeledSentence> test,
                                   std::span<const LabeledSentence> train,
                                   const EmbeddingTable& table,
                                   const SimilarityOptions& options) {
  if (train.empty()) {
    throw Error(ErrorCode::kInsufficientData, "train corpus is empty");
  }
  SimilaritySets sets;

  // Train rows ordered by id so that the first maximum is the smallest id.
  std::vector<std::size_t> train_order(train.size());
  std::iota(train_order.begin(), train_order.end(), 0);
  std::sort(train_order.begin(), train_order.end(),
            [&](std::size_t a, std::size_t b) { return train[a].id < train[b].id; });
  std::vector<SentenceVector> train_vectors;
  train_vectors.reserve(train.size());
  for (std::size_t i : train_order) {
    train_vectors.push_back(
        ComputeSentenceVector(train[i].tokens, table, options.oov));
  }
  const SentenceMatrix train_matrix(train_vectors, table.dimension());
  sets.zero_vector_train = train_matrix.zero_rows();
  if (train_matrix.rows() == 0) {
    throw Error(ErrorCode::kInsufficientData,
                "no train sentence has an in-vocabulary token");
  }

  std::vector<const LabeledSentence*> eligible;
  std::vector<SentenceVector> test_vectors;
  for (const auto& s : test) {
    if (!IsMixedSegment(s, options.punct)) continue;
    ++sets.eligible;
    eligible.push_back(&s);
    test_vectors.push_back(ComputeSentenceVector(s.tokens, table, options.oov));
  }
  const SentenceMatrix test_matrix(test_vectors, table.dimension());
  sets.zero_vector_test = test_matrix.zero_rows();

  const auto neighbors = NearestNeighbors(test_matrix, train_matrix);
  for (std::size_t q = 0; q < neighbors.size(); ++q) {
    const Neighbor& nb = *neighbors[q];
    const LabeledSentence& query = *eligible[test_matrix.SourceIndex(q)];
    const LabeledSentence& nearest = train[train_order[nb.train_index]];
    const BinaryLabel nearest_label = Binarize(
        DeriveSentenceLabel(nearest.labels, options.seed, nearest.id));
    SimilarityEntry entry{query.id, nb.similarity, nearest.id};
    if (nearest_label == BinaryLabel::kArg) {
      sets.same.push_back(std::move(entry));
    } else {
      sets.opposite.push_back(std::move(entry));
    }
  }
  return sets;
}

double ArgTokenRatio(const LabeledSentence& sentence) {
  if (sentence.labels.empty()) {
    throw Error(ErrorCode::kEmptyInput,
                "argumentative token ratio of an empty sentence");
  }
  const auto arg = std::count_if(sentence.labels.begin(), sentence.labels.end(),
                                 IsArgumentative);
  return static_cast<double>(arg) / static_cast<double>(sentence.labels.size());
}

std::optional<double> PointBiserial(std::span<const SubpopRecord> records) {
  const std::size_t n = records.size();
  if (n < 3) return std::nullopt;
  std::size_t n1 = 0;
  double sum1 = 0.0, sum0 = 0.0, sum = 0.0;
  for (const auto& r : records) {
    sum += r.value;
    if (r.correct) {
      ++n1;
      sum1 += r.value;
    } else {
      sum0 += r.value;
    }
  }
  const std::size_t n0 = n - n1;
  if (n1 == 0 || n0 == 0) return std::nullopt;
  const bool constant = std::all_of(records.begin(), records.end(), [&](const auto& r) {
    return r.value == records.front().value;
  });
  if (constant) return std::nullopt;
  const double mean = sum / static_cast<double>(n);
  double ss = 0.0;
  for (const auto& r : records) ss += (r.value - mean) * (r.value - mean);
  const double sd = std::sqrt(ss / static_cast<double>(n));
  if (sd == 0.0) return std::nullopt;
  const double m1 = sum1 / static_cast<double>(n1);
  const double m0 = sum0 / static_cast<double>(n0);
  const double p = static_cast<double>(n1) / static_cast<double>(n);
  const double q = static_cast<double>(n0) / static_cast<double>(n);
  return std::clamp((m1 - m0) / sd * std::sqrt(p * q), -1.0, 1.0);
}

std::vector<SubpopRecord> AttachCorrectness(
    std::span<const std::pair<std::string, double>> values,
    const Corpus& gold, const RunPredictions& predictions, Seed seed) {
  std::vector<SubpopRecord> records;
  records.reserve(values.size());
  for (const auto& [id, value] : values) {
    const LabeledSentence* sentence = gold.Find(id);
    if (sentence == nullptr) {
      throw Error(ErrorCode::kInvalidArgument,
                  "sentence '" + id + "' is not in the gold corpus");
    }
    if (!std::isfinite(value)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "non-finite value for sentence '" + id + "'");
    }
    auto [g, p] = GoldAndPredicted(*sentence, predictions, seed);
    records.push_back({id, value, g == p});
  }
  return records;
}

std::vector<std::pair<std::string, double>> ArgRatioValues(
    std::span<const LabeledSentence> test, PunctMode punct) {
  std::vector<std::pair<std::string, double>> values;
  for (const auto& s : test) {
    if (IsMixedSegment(s, punct)) values.emplace_back(s.id, ArgTokenRatio(s));
  }
  return values;
}

SubpopReport RunSubpop(SubpopTest test,
                       std::span<const std::pair<std::string, double>> values,
                       const Corpus& gold, const PredictionSet& predictions,
                       Seed seed) {
  if (predictions.runs.empty()) {
    throw Error(ErrorCode::kMissingPrediction, "no prediction runs");
  }
  SubpopReport report;
  report.test = test;
  report.set_size = values.size();
  std::vector<double> defined;
  for (const auto& [run_id, run] : predictions.runs) {
    const auto records = AttachCorrectness(values, gold, run, seed);
    const auto r = PointBiserial(records);
    report.runs.push_back(run_id);
    report.r_pb.push_back(r);
    if (r) {
      defined.push_back(*r);
    } else {
      ++report.undefined_runs;
    }
  }
  if (!defined.empty()) {
    report.distribution = AggregateRuns(defined, "r_pb");
  }
  return report;
}

}  // namespace argrobust
