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

#include "argrobust/labelalg.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "fixtures.h"
#include "oracles.h"

namespace argrobust {
namespace {

using testing::L;
using testing::MakeSentence;

using oracle::TableRule;

TEST(LabelsTest, ParseAndName) {
  for (Label l : kAllLabels) EXPECT_EQ(ParseLabel(LabelName(l)), l);
  for (BinaryLabel b : kAllBinaryLabels) {
    EXPECT_EQ(ParseBinaryLabel(BinaryLabelName(b)), b);
  }
  EXPECT_THROW(ParseLabel("ARG"), Error);
  EXPECT_THROW(ParseLabel("pro"), Error);
  EXPECT_THROW(ParseBinaryLabel("PRO"), Error);
  try {
    ParseLabel("ARG");
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownLabel);
  }
}

TEST(DeriveTest, Examples) {
  const Seed seed{42};
  EXPECT_EQ(DeriveSentenceLabel(L("NNPPN"), seed, "a"), Label::kPro);
  EXPECT_EQ(DeriveSentenceLabel(L("PPCN"), seed, "a"), Label::kPro);
  EXPECT_EQ(DeriveSentenceLabel(L("NNN"), seed, "a"), Label::kNon);
  EXPECT_EQ(DeriveSentenceLabel(L("NCN"), seed, "a"), Label::kCon);
  EXPECT_EQ(DeriveSentenceLabel(L("PCC"), seed, "a"), Label::kCon);
}

TEST(DeriveTest, EmptyThrows) {
  std::vector<Label> none;
  EXPECT_THROW(DeriveSentenceLabel(none, Seed{1}, "x"), Error);
}

TEST(DeriveTest, TieIsDeterministic) {
  const auto tie = L("PC");
  const Label first = DeriveSentenceLabel(tie, Seed{42}, "x");
  EXPECT_TRUE(first == Label::kPro || first == Label::kCon);
  for (int i = 0; i < 100; ++i) {
    EXPECT_EQ(DeriveSentenceLabel(tie, Seed{42}, "x"), first);
  }
}

TEST(DeriveTest, TieDependsOnSeedAndKey) {
  const auto tie = L("PPCC");
  std::set<Label> seen;
  for (std::uint64_t s = 0; s < 64; ++s) {
    seen.insert(DeriveSentenceLabel(tie, Seed{s}, "k"));
  }
  EXPECT_EQ(seen.size(), 2u);
  seen.clear();
  for (int k = 0; k < 64; ++k) {
    seen.insert(DeriveSentenceLabel(tie, Seed{7}, "id" + std::to_string(k)));
  }
  EXPECT_EQ(seen.size(), 2u);
}

TEST(DeriveTest, ExhaustiveAgainstTable) {
  for (int n = 1; n <= 6; ++n) {
    int total = 1;
    for (int i = 0; i < n; ++i) total *= 3;
    for (int code = 0; code < total; ++code) {
      std::vector<Label> labels;
      for (int i = 0, c = code; i < n; ++i, c /= 3) {
        labels.push_back(kAllLabels[c % 3]);
      }
      const Label got = DeriveSentenceLabel(labels, Seed{3}, "s");
      if (auto want = TableRule(labels)) {
        EXPECT_EQ(got, *want);
      } else {
        EXPECT_NE(got, Label::kNon);
      }
      // Binarized result is NON_ARG iff no argumentative token.
      const bool any_arg =
          std::any_of(labels.begin(), labels.end(), IsArgumentative);
      EXPECT_EQ(Binarize(got) == BinaryLabel::kNonArg, !any_arg);
    }
  }
}

TEST(BinarizeTest, Mapping) {
  EXPECT_EQ(Binarize(Label::kPro), BinaryLabel::kArg);
  EXPECT_EQ(Binarize(Label::kCon), BinaryLabel::kArg);
  EXPECT_EQ(Binarize(Label::kNon), BinaryLabel::kNonArg);
}

TEST(BroadcastTest, Examples) {
  EXPECT_EQ(BroadcastSentenceLabel(Label::kPro, 3), L("PPP"));
  EXPECT_EQ(BroadcastSentenceLabel(Label::kNon, 1), L("N"));
  EXPECT_EQ(BroadcastSentenceLabel(Label::kCon, 5), L("CCCCC"));
  EXPECT_THROW(BroadcastSentenceLabel(Label::kPro, 0), Error);
}

TEST(BroadcastTest, RoundTrip) {
  for (Label x : kAllLabels) {
    for (std::size_t n = 1; n <= 8; ++n) {
      EXPECT_EQ(DeriveSentenceLabel(BroadcastSentenceLabel(x, n), Seed{9}, "r"),
                x);
    }
  }
}

TEST(MixedSegmentTest, Cases) {
  // Figure-1 style: NON, CON, NON.
  auto gun = MakeSentence("g", "gun control",
                          {"Yes", ",", "guns", "protect", "but", "laws", "."},
                          L("NNCCNNN"));
  EXPECT_TRUE(IsMixedSegment(gun));
  auto non = MakeSentence("n", "gun control", {"a", "b"}, L("NN"));
  EXPECT_FALSE(IsMixedSegment(non));
  auto dot = MakeSentence("d", "gun control", {"a", "b", "."}, L("PPN"));
  EXPECT_FALSE(IsMixedSegment(dot));
  EXPECT_TRUE(IsMixedSegment(dot, PunctMode::kInclude));
  auto both = MakeSentence("b", "gun control", {"a", "b"}, L("PC"));
  EXPECT_FALSE(IsMixedSegment(both));
}

}  // namespace
}  // namespace argrobust
