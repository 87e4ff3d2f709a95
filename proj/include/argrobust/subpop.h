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

#ifndef ARGROBUST_SUBPOP_H_
#define ARGROBUST_SUBPOP_H_

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "argrobust/corpus.h"
#include "argrobust/labelalg.h"
#include "argrobust/metrics.h"

namespace argrobust {

// Word vectors in the word2vec text layout:
//   <count> <dimension>
//   <token> <v1> ... <vd>
class EmbeddingTable {
 public:
  EmbeddingTable() = default;
  explicit EmbeddingTable(int dimension) : dimension_(dimension) {}

  static EmbeddingTable Parse(std::istream& in);

  // Throws on a dimension mismatch or a repeated token.
  void Add(std::string token, std::span<const float> vector);
  // nullptr if absent. Lookup is exact-string.
  const float* Find(std::string_view token) const;

  int dimension() const { return dimension_; }
  std::size_t size() const { return index_.size(); }
  bool empty() const { return index_.empty(); }

 private:
  int dimension_ = 0;
  std::vector<float> data_;
  std::unordered_map<std::string, std::size_t> index_;
};

enum class OovMode {
  kSkip,  // average over in-vocabulary tokens only
  kZero,  // OOV tokens contribute a zero vector to the average
};

OovMode ParseOovMode(std::string_view text);

struct SentenceVector {
  std::vector<double> values;
  std::size_t found = 0;
  // No token was in the table; `values` is the zero vector.
  bool flagged = false;
};

SentenceVector ComputeSentenceVector(std::span<const std::string> tokens,
                                     const EmbeddingTable& table,
                                     OovMode mode = OovMode::kSkip);

// Clamped to [-1, 1]; nullopt if either vector has zero norm. Throws on a
// dimension mismatch.
std::optional<double> CosineSimilarity(std::span<const double> u,
                                       std::span<const double> v);

// Nearest train sentence for one test sentence.
struct Neighbor {
  std::size_t train_index = 0;  // index into the train span
  double similarity = 0.0;
};

// Row-major matrix of unit-normalized sentence vectors; zero-norm rows are
// dropped and remembered.
class SentenceMatrix {
 public:
  SentenceMatrix(std::span<const SentenceVector> vectors, int dimension);

  std::size_t rows() const { return source_index_.size(); }
  int dimension() const { return dimension_; }
  std::span<const double> Row(std::size_t r) const {
    return {data_.data() + r * dimension_, static_cast<std::size_t>(dimension_)};
  }
  std::size_t SourceIndex(std::size_t r) const { return source_index_[r]; }
  std::size_t zero_rows() const { return zero_rows_; }

 private:
  int dimension_;
  std::vector<double> data_;
  std::vector<std::size_t> source_index_;
  std::size_t zero_rows_ = 0;
};

// For every query row, the train row with the greatest cosine similarity.
// Train rows are scanned in the given order and only a strictly greater
// similarity replaces the current best, so ties go to the earlier row.
// Queries run in parallel; each query's scan is sequential.
std::vector<std::optional<Neighbor>> NearestNeighbors(
    const SentenceMatrix& queries, const SentenceMatrix& train);
std::vector<std::optional<Neighbor>> NearestNeighborsSerial(
    const SentenceMatrix& queries, const SentenceMatrix& train);

enum class SubpopTest { kT4, kT5, kT6 };

std::string_view SubpopTestName(SubpopTest test);
SubpopTest ParseSubpopTest(std::string_view text);

enum class LabelRelation {
  kSame,      // nearest train sentence is ARG (T4)
  kOpposite,  // nearest train sentence is NON_ARG (T5)
};

struct SimilarityEntry {
  std::string sentence_id;
  double coefficient = 0.0;
  std::string nearest_train_id;
};

struct SimilaritySets {
  std::vector<SimilarityEntry> same;      // T4
  std::vector<SimilarityEntry> opposite;  // T5
  std::size_t eligible = 0;               // mixed-segment test sentences
  std::size_t zero_vector_test = 0;       // eligible but no in-vocab token
  std::size_t zero_vector_train = 0;
};

struct SimilarityOptions {
  OovMode oov = OovMode::kSkip;
  PunctMode punct = PunctMode::kIgnore;
  Seed seed;  // for binarized gold sentence labels of train sentences
};

// Assigns each mixed-segment test sentence to the T4 or T5 set according to
// the binary gold label of its most similar train sentence (ties toward the
// smaller train id). Throws kInsufficientData for an empty train set.
SimilaritySets BuildSimilaritySets(std::span<const LabeledSentence> test,
                                   std::span<const LabeledSentence> train,
                                   const EmbeddingTable& table,
                                   const SimilarityOptions& options);

struct SubpopRecord {
  std::string sentence_id;
  double value = 0.0;
  bool correct = false;
};

// Share of PRO/CON tokens; throws for an empty sentence.
double ArgTokenRatio(const LabeledSentence& sentence);

// ((M1 - M0) / s_n) * sqrt(p q) with the population standard deviation s_n.
// nullopt when fewer than 3 records, a correctness group is empty, or the
// values have zero variance.
std::optional<double> PointBiserial(std::span<const SubpopRecord> records);

// Pairs (sentence id, continuous value) with the run's correctness, judged
// on binarized sentence labels.
std::vector<SubpopRecord> AttachCorrectness(
    std::span<const std::pair<std::string, double>> values,
    const Corpus& gold, const RunPredictions& predictions, Seed seed);

struct SubpopReport {
  SubpopTest test = SubpopTest::kT6;
  std::size_t set_size = 0;
  std::vector<int> runs;
  std::vector<std::optional<double>> r_pb;  // per run
  std::size_t undefined_runs = 0;
  // Over the defined runs; absent if none is defined.
  std::optional<ScoreDistribution> distribution;
  std::size_t eligible = 0;
  std::size_t excluded_zero_vector = 0;
};

// Continuous values for T6: argumentative token ratio of every mixed-segment
// test sentence.
std::vector<std::pair<std::string, double>> ArgRatioValues(
    std::span<const LabeledSentence> test, PunctMode punct);

// Correlates the given (id, value) set with correctness for every run.
SubpopReport RunSubpop(SubpopTest test,
                       std::span<const std::pair<std::string, double>> values,
                       const Corpus& gold, const PredictionSet& predictions,
                       Seed seed);

}  // namespace argrobust

#endif  // ARGROBUST_SUBPOP_H_
