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

// Parallel kernels against their serial references.

#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "argrobust/metrics.h"
#include "argrobust/subpop.h"
#include "fixtures.h"

namespace argrobust {
namespace {

struct SegmentData {
  std::vector<LabeledSentence> gold;
  RunPredictions run;
};

const SegmentData& Segments() {
  static const SegmentData data = [] {
    SegmentData d;
    d.gold = testing::MakeSyntheticCorpus(1).sentences();
    std::mt19937_64 rng(3);
    for (const auto& s : d.gold) {
      std::vector<Label> pred = s.labels;
      for (auto& l : pred) {
        if (rng() % 5 == 0) l = kAllLabels[rng() % 3];
      }
      d.run[s.id] = PredictionRecord{s.id, 0, pred};
    }
    return d;
  }();
  return data;
}

void BM_SegmentF1(benchmark::State& state) {
  const auto& d = Segments();
  for (auto _ : state) benchmark::DoNotOptimize(SegmentF1(d.gold, d.run));
}

void BM_SegmentF1Serial(benchmark::State& state) {
  const auto& d = Segments();
  for (auto _ : state) benchmark::DoNotOptimize(SegmentF1Serial(d.gold, d.run));
}

std::vector<SentenceVector> RandomVectors(std::size_t n, int dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  std::vector<SentenceVector> out(n);
  for (auto& v : out) {
    for (int d = 0; d < dim; ++d) v.values.push_back(normal(rng));
  }
  return out;
}

constexpr int kDim = 300;

void BM_NearestNeighbors(benchmark::State& state) {
  const SentenceMatrix train(RandomVectors(4000, kDim, 1), kDim);
  const SentenceMatrix queries(RandomVectors(state.range(0), kDim, 2), kDim);
  for (auto _ : state) benchmark::DoNotOptimize(NearestNeighbors(queries, train));
}

void BM_NearestNeighborsSerial(benchmark::State& state) {
  const SentenceMatrix train(RandomVectors(4000, kDim, 1), kDim);
  const SentenceMatrix queries(RandomVectors(state.range(0), kDim, 2), kDim);
  for (auto _ : state) benchmark::DoNotOptimize(NearestNeighborsSerial(queries, train));
}

BENCHMARK(BM_SegmentF1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SegmentF1Serial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_NearestNeighbors)->Arg(200)->Arg(1000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_NearestNeighborsSerial)->Arg(200)->Arg(1000)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace
}  // namespace argrobust

BENCHMARK_MAIN();
