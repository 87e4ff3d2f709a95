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

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "fixtures.h"
#include "oracles.h"

namespace argrobust {
namespace {

using testing::L;
using testing::MakeSentence;

// Full confusion matrix, then per-class F1 from its row and column sums.
template <typename T, std::size_t N>
double ConfusionMacroF1(const std::vector<T>& gold, const std::vector<T>& pred,
                        const std::array<T, N>& classes) {
  std::array<std::array<int, N>, N> m{};
  auto index = [&](T v) {
    for (std::size_t k = 0; k < N; ++k) {
      if (classes[k] == v) return k;
    }
    return N;
  };
  for (std::size_t i = 0; i < gold.size(); ++i) ++m[index(gold[i])][index(pred[i])];
  double sum = 0;
  int defined = 0;
  for (std::size_t c = 0; c < N; ++c) {
    int row = 0, col = 0;
    for (std::size_t k = 0; k < N; ++k) {
      row += m[c][k];
      col += m[k][c];
    }
    if (row == 0 && col == 0) continue;
    ++defined;
    const double tp = m[c][c];
    // F1 = 2TP / (2TP + FP + FN)
    sum += (2 * tp) / (row + col);
  }
  return sum / defined;
}

RunPredictions TokenRun(const std::vector<LabeledSentence>& gold,
                        const std::vector<std::vector<Label>>& pred) {
  RunPredictions run;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    run[gold[i].id] = PredictionRecord{gold[i].id, 0, pred[i]};
  }
  return run;
}

TEST(F1Test, PerClassExample) {
  const auto gold = L("PPN");
  const auto pred = L("PNN");
  auto f1 = PerClassF1<Label>(gold, pred, Label::kPro);
  ASSERT_TRUE(f1);
  EXPECT_NEAR(*f1, 2.0 / 3.0, 1e-15);
  EXPECT_FALSE(PerClassF1<Label>(gold, pred, Label::kCon));
  EXPECT_EQ(*PerClassF1<Label>(gold, gold, Label::kPro), 1.0);
  const auto wrong = L("CCC");
  EXPECT_EQ(*PerClassF1<Label>(gold, wrong, Label::kCon), 0.0);
  EXPECT_THROW(PerClassF1<Label>(gold, L("P"), Label::kPro), Error);
}

TEST(F1Test, MacroMatchesConfusionOracle) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + rng() % 40;
    std::vector<Label> gold, pred;
    for (std::size_t i = 0; i < n; ++i) {
      gold.push_back(kAllLabels[rng() % 3]);
      pred.push_back(kAllLabels[rng() % 3]);
    }
    EXPECT_NEAR(MacroF1(gold, pred, LabelSpace::kThreeClass),
                ConfusionMacroF1(gold, pred, kAllLabels), 1e-12);
    std::vector<BinaryLabel> gb, pb;
    for (std::size_t i = 0; i < n; ++i) {
      gb.push_back(Binarize(gold[i]));
      pb.push_back(Binarize(pred[i]));
    }
    EXPECT_NEAR(MacroF1(gold, pred, LabelSpace::kBinary),
                ConfusionMacroF1(gb, pb, kAllBinaryLabels), 1e-12);
  }
}

TEST(TokenF1Test, ToyFixture) {
  std::vector<LabeledSentence> gold = {
      MakeSentence("a", "cloning", testing::Words(5), L("PPNNC")),
      MakeSentence("b", "cloning", testing::Words(3), L("NNN"))};
  auto run = TokenRun(gold, {L("PNNNC"), L("NPN")});
  std::vector<Label> g = L("PPNNCNNN"), p = L("PNNNCNPN");
  EXPECT_NEAR(TokenF1(gold, run, LabelSpace::kThreeClass),
              ConfusionMacroF1(g, p, kAllLabels), 1e-15);
  EXPECT_EQ(TokenF1(gold, TokenRun(gold, {L("PPNNC"), L("NNN")}),
                    LabelSpace::kThreeClass),
            1.0);
}

TEST(TokenF1Test, SentenceGranularityEqualsBroadcast) {
  std::vector<LabeledSentence> gold = {
      MakeSentence("a", "cloning", testing::Words(4), L("PPNN")),
      MakeSentence("b", "cloning", testing::Words(2), L("CN"))};
  RunPredictions sent, tok;
  sent["a"] = PredictionRecord{"a", 0, Label::kPro};
  sent["b"] = PredictionRecord{"b", 0, Label::kNon};
  tok["a"] = PredictionRecord{"a", 0, L("PPPP")};
  tok["b"] = PredictionRecord{"b", 0, L("NN")};
  for (auto space : {LabelSpace::kThreeClass, LabelSpace::kBinary}) {
    EXPECT_EQ(TokenF1(gold, sent, space), TokenF1(gold, tok, space));
  }
  EXPECT_EQ(SegmentF1(gold, sent), SegmentF1(gold, tok));
}

TEST(TokenF1Test, Errors) {
  std::vector<LabeledSentence> gold = {
      MakeSentence("a", "cloning", testing::Words(2), L("PN"))};
  RunPredictions empty;
  try {
    TokenF1(gold, empty, LabelSpace::kThreeClass);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMissingPrediction);
  }
  RunPredictions bad;
  bad["a"] = PredictionRecord{"a", 0, L("P")};
  EXPECT_THROW(TokenF1(gold, bad, LabelSpace::kThreeClass), Error);
  EXPECT_THROW(SegmentF1(gold, bad), Error);
}

TEST(SentenceF1Test, PerfectAndDerangement) {
  std::vector<LabeledSentence> gold = {
      MakeSentence("a", "cloning", testing::Words(3), L("PPN")),
      MakeSentence("b", "cloning", testing::Words(2), L("CN")),
      MakeSentence("c", "cloning", testing::Words(2), L("NN"))};
  RunPredictions perfect, deranged;
  const Label next[] = {Label::kCon, Label::kNon, Label::kPro};
  for (const auto& s : gold) {
    const Label g = DeriveSentenceLabel(s.labels, Seed{1}, s.id);
    perfect[s.id] = PredictionRecord{s.id, 0, g};
    deranged[s.id] = PredictionRecord{s.id, 0, next[static_cast<int>(g)]};
  }
  EXPECT_EQ(SentenceF1(gold, perfect, LabelSpace::kThreeClass, Seed{1}), 1.0);
  EXPECT_EQ(SentenceF1(gold, deranged, LabelSpace::kThreeClass, Seed{1}), 0.0);
  // Token predictions reduce via the sentence rule.
  RunPredictions tok;
  tok["a"] = PredictionRecord{"a", 0, L("PNN")};
  tok["b"] = PredictionRecord{"b", 0, L("CC")};
  tok["c"] = PredictionRecord{"c", 0, L("NN")};
  EXPECT_EQ(SentenceF1(gold, tok, LabelSpace::kThreeClass, Seed{1}), 1.0);
}

TEST(SegmentTest, OverlapRatio) {
  const Segment pro{Label::kPro, 0, 4, false};
  EXPECT_EQ(SegmentOverlapRatio(pro, L("PPPN")), 0.75);
  EXPECT_EQ(SegmentOverlapRatio(pro, L("PPPP")), 1.0);
  EXPECT_EQ(SegmentOverlapRatio(pro, L("CNCN")), 0.0);
}

TEST(SegmentTest, SentenceExamples) {
  auto non = MakeSentence("n", "cloning", testing::Words(3), L("NNN"));
  EXPECT_EQ(SentenceSegmentF1(non, L("NNN")), 1.0);
  EXPECT_EQ(SentenceSegmentF1(non, L("NPN")), 0.0);
  auto con = MakeSentence("c", "cloning", testing::Words(2), L("CC"));
  EXPECT_EQ(SentenceSegmentF1(con, L("CC")), 1.0);
  auto mixed =
      MakeSentence("m", "cloning", testing::Words(9), L("PPPPNNNCC"));
  EXPECT_EQ(SentenceSegmentF1(mixed, L("PPNNNNNCC")), 0.5);
}

TEST(SegmentTest, BruteForceOracle) {
  std::mt19937_64 rng(23);
  std::vector<LabeledSentence> gold;
  std::vector<std::vector<Label>> preds;
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = 1 + rng() % 12;
    std::vector<Label> g, p;
    // Bias toward runs so segments are longer than one token.
    Label cur = kAllLabels[rng() % 3];
    for (std::size_t k = 0; k < n; ++k) {
      if (rng() % 3 == 0) cur = kAllLabels[rng() % 3];
      g.push_back(cur);
      p.push_back(rng() % 2 ? cur : kAllLabels[rng() % 3]);
    }
    auto s = MakeSentence("r" + std::to_string(i), "cloning",
                          testing::Words(n), g);
    EXPECT_EQ(SentenceSegmentF1(s, p), oracle::SegmentF1(g, p));
    gold.push_back(std::move(s));
    preds.push_back(std::move(p));
  }
  auto run = TokenRun(gold, preds);
  double sum = 0;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    sum += oracle::SegmentF1(gold[i].labels, preds[i]);
  }
  EXPECT_EQ(SegmentF1Serial(gold, run), sum / gold.size());
  EXPECT_EQ(SegmentF1(gold, run), SegmentF1Serial(gold, run));
}

TEST(AccuracyTest, Counting) {
  std::vector<BinaryLabel> gold(25, BinaryLabel::kArg), pred = gold;
  EXPECT_EQ(Accuracy(gold, pred), 1.0);
  for (int i = 0; i < 6; ++i) pred[i] = BinaryLabel::kNonArg;
  EXPECT_DOUBLE_EQ(Accuracy(gold, pred), 0.76);
  std::vector<BinaryLabel> all_wrong(25, BinaryLabel::kNonArg);
  EXPECT_EQ(Accuracy(gold, all_wrong), 0.0);
  EXPECT_THROW(Accuracy(gold, std::vector<BinaryLabel>(3)), Error);
}

TEST(DeltaTest, Examples) {
  auto r = DeltaAcc(0.760, 0.683);
  EXPECT_NEAR(r.delta_abs, -0.077, 1e-12);
  EXPECT_NEAR(*r.delta_rel, -10.1, 0.05);
  r = DeltaAcc(0.760, 0.830);
  EXPECT_NEAR(r.delta_abs, 0.070, 1e-12);
  EXPECT_NEAR(*r.delta_rel, 9.2, 0.05);
  r = DeltaAcc(0.5, 0.5);
  EXPECT_EQ(r.delta_abs, 0.0);
  EXPECT_EQ(*r.delta_rel, 0.0);
  EXPECT_FALSE(DeltaAcc(0.0, 0.3).delta_rel);
  r = DeltaAcc(0.835, 0.808);
  EXPECT_NEAR(r.delta_abs, r.acc_after - r.acc_before, 1e-12);
  EXPECT_NEAR(*r.delta_rel, 100 * r.delta_abs / r.acc_before, 1e-12);
}

TEST(AggregateTest, Examples) {
  std::vector<double> one = {0.5};
  auto d = AggregateRuns(one);
  EXPECT_EQ(d.mean, 0.5);
  EXPECT_EQ(d.std, 0.0);
  std::vector<double> three = {0.1, 0.2, 0.3};
  d = AggregateRuns(three);
  EXPECT_NEAR(d.mean, 0.2, 1e-15);
  EXPECT_NEAR(d.std, 0.1, 1e-15);
  std::vector<double> same(5, 0.713);
  d = AggregateRuns(same);
  EXPECT_EQ(d.std, 0.0);
  EXPECT_EQ(d.mean, 0.713);
  std::vector<double> none;
  EXPECT_THROW(AggregateRuns(none), Error);
}

TEST(PredictionsTest, ParseAndWrite) {
  const std::string text =
      R"({"sentence_id":"a","run":0,"granularity":"token","labels":["PRO","NON"]})"
      "\n"
      R"({"sentence_id":"a","run":1,"granularity":"sentence","label":"CON"})"
      "\n";
  std::istringstream in(text);
  auto set = ParsePredictions(in);
  EXPECT_EQ(set.RunIds(), (std::vector<int>{0, 1}));
  EXPECT_EQ(set.runs[0]["a"].granularity(), Granularity::kToken);
  EXPECT_EQ(set.runs[1]["a"].granularity(), Granularity::kSentence);
  std::ostringstream out;
  WritePrediction(set.runs[0]["a"], out);
  WritePrediction(set.runs[1]["a"], out);
  EXPECT_EQ(out.str(), text);

  EXPECT_EQ(ResolveTokenLabels(set.runs[1]["a"], 3), L("CCC"));
  EXPECT_THROW(ResolveTokenLabels(set.runs[0]["a"], 3), Error);
}

TEST(PredictionsTest, Rejects) {
  for (const char* bad :
       {R"({"sentence_id":"a","granularity":"token","labels":["ARG"]})",
        R"({"sentence_id":"a","granularity":"token","label":"PRO"})",
        R"({"sentence_id":"a","granularity":"word","label":"PRO"})",
        R"({"granularity":"sentence","label":"PRO"})",
        "not json"}) {
    std::istringstream in(bad);
    EXPECT_THROW(ParsePredictions(in), Error) << bad;
  }
  std::istringstream dup(
      R"({"sentence_id":"a","granularity":"sentence","label":"PRO"})"
      "\n"
      R"({"sentence_id":"a","granularity":"sentence","label":"PRO"})");
  EXPECT_THROW(ParsePredictions(dup), Error);
}

}  // namespace
}  // namespace argrobust
