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

#ifndef ARGROBUST_TESTS_ORACLES_H_
#define ARGROBUST_TESTS_ORACLES_H_

// Independent reference implementations used by the tests. None of these
// call into the library.

#include <cmath>
#include <optional>
#include <vector>

#include "argrobust/labels.h"
#include "argrobust/subpop.h"

namespace argrobust::oracle {

// The aggregation table written out case by case: which labels occur, then
// counts only when PRO and CON both occur. nullopt marks a tie.
inline std::optional<Label> TableRule(const std::vector<Label>& labels) {
  int pro = 0, con = 0;
  for (Label l : labels) {
    if (l == Label::kPro) ++pro;
    if (l == Label::kCon) ++con;
  }
  if (pro == 0 && con == 0) return Label::kNon;
  if (pro > 0 && con == 0) return Label::kPro;
  if (con > 0 && pro == 0) return Label::kCon;
  if (pro > con) return Label::kPro;
  if (con > pro) return Label::kCon;
  return std::nullopt;
}

// Segments re-derived by scanning run boundaries; r > .5 as 2*match > len.
inline double SegmentF1(const std::vector<Label>& gold,
                        const std::vector<Label>& pred) {
  int total = 0, correct = 0;
  std::size_t i = 0;
  while (i < gold.size()) {
    std::size_t j = i;
    while (j < gold.size() && gold[j] == gold[i]) ++j;
    if (gold[i] != Label::kNon) {
      int match = 0;
      for (std::size_t k = i; k < j; ++k) match += pred[k] == gold[i];
      ++total;
      if (2 * match > static_cast<int>(j - i)) ++correct;
    }
    i = j;
  }
  if (total == 0) {
    for (Label p : pred) {
      if (p != Label::kNon) return 0.0;
    }
    return 1.0;
  }
  return static_cast<double>(correct) / total;
}

// Pearson correlation of (correct as 0/1, value).
inline double Pearson(const std::vector<SubpopRecord>& records) {
  const double n = static_cast<double>(records.size());
  double sx = 0, sy = 0;
  for (const auto& r : records) {
    sx += r.correct;
    sy += r.value;
  }
  const double mx = sx / n, my = sy / n;
  double cov = 0, vx = 0, vy = 0;
  for (const auto& r : records) {
    const double dx = r.correct - mx, dy = r.value - my;
    cov += dx * dy;
    vx += dx * dx;
    vy += dy * dy;
  }
  return cov / std::sqrt(vx * vy);
}

}  // namespace argrobust::oracle

#endif  // ARGROBUST_TESTS_ORACLES_H_
