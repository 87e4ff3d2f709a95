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

#ifndef ARGROBUST_REPROGATE_H_
#define ARGROBUST_REPROGATE_H_

#include <cstddef>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "argrobust/metrics.h"

namespace argrobust {

struct ReproEntry {
  std::string setting;  // e.g. "in-domain"
  std::string model;
  std::string metric;
  std::string setup;  // "token-based" / "sentence-based"
  double original_mean = 0.0;
  ScoreDistribution repro;
};

// Reproduced iff |original - mean| <= 2 * std, boundary included. With
// std == 0 the means must be equal. For std > 0 an absolute slack of 1e-12
// absorbs decimal-to-binary rounding of the inputs.
bool Gate(const ReproEntry& entry);

struct ReproVerdict {
  ReproEntry entry;
  double gap = 0.0;
  bool reproduced = false;
};

struct SettingCount {
  std::size_t reproduced = 0;
  std::size_t total = 0;
};

struct ReproReport {
  std::vector<ReproVerdict> verdicts;
  std::map<std::string, SettingCount> per_setting;
};

ReproReport CompareTable(std::span<const ReproEntry> entries);

// JSON array of {"setting","model","metric","setup","original_mean",
// "repro_mean","repro_std"} objects; "repro_values" may replace mean/std.
std::vector<ReproEntry> ReadReproEntries(std::istream& in);

void WriteReproReportJson(const ReproReport& report, std::ostream& out);
// Aligned text table; reproduced rows carry a '*'.
void WriteReproReportTable(const ReproReport& report, std::ostream& out);

}  // namespace argrobust

#endif  // ARGROBUST_REPROGATE_H_
