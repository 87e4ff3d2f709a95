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

#include "argrobust/reprogate.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <istream>
#include <iterator>
#include <ostream>

#include "json.hpp"

namespace argrobust {
namespace {

using nlohmann::ordered_json;

constexpr double kRoundingSlack = 1e-12;

std::string Fixed(double value, int digits = 3) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, value);
  return buf;
}

}  // namespace

bool Gate(const ReproEntry& entry) {
  const double gap = std::abs(entry.original_mean - entry.repro.mean);
  if (entry.repro.std == 0.0) return gap == 0.0;
  return gap <= 2.0 * entry.repro.std + kRoundingSlack;
}

ReproReport CompareTable(std::span<const ReproEntry> entries) {
  ReproReport report;
  for (const auto& entry : entries) {
    ReproVerdict verdict{entry, std::abs(entry.original_mean - entry.repro.mean),
                         Gate(entry)};
    auto& count = report.per_setting[entry.setting];
    ++count.total;
    if (verdict.reproduced) ++count.reproduced;
    report.verdicts.push_back(std::move(verdict));
  }
  return report;
}

std::vector<ReproEntry> ReadReproEntries(std::istream& in) {
  const std::string text(std::istreambuf_iterator<char>(in), {});
  std::vector<ReproEntry> entries;
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) return entries;
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const ordered_json::exception& e) {
    throw Error(ErrorCode::kMalformedJson, e.what());
  }
  if (doc.is_object() && doc.contains("entries")) doc = doc["entries"];
  if (!doc.is_array()) {
    throw Error(ErrorCode::kMalformedJson,
                "reproduction entries must be a JSON array");
  }
  for (const auto& item : doc) {
    if (!item.is_object()) {
      throw Error(ErrorCode::kMalformedJson, "entry is not an object");
    }
    auto string_field = [&](const char* key) {
      auto it = item.find(key);
      return it != item.end() && it->is_string() ? it->get<std::string>()
                                                 : std::string();
    };
    auto number_field = [&](const char* key) {
      auto it = item.find(key);
      if (it == item.end() || !it->is_number()) {
        throw Error(ErrorCode::kMalformedJson,
                    std::string("entry lacks numeric '") + key + "'");
      }
      return it->get<double>();
    };
    ReproEntry entry;
    entry.setting = string_field("setting");
    entry.model = string_field("model");
    entry.metric = string_field("metric");
    entry.setup = string_field("setup");
    entry.original_mean = number_field("original_mean");
    if (item.contains("repro_values")) {
      std::vector<double> values;
      for (const auto& v : item["repro_values"]) {
        if (!v.is_number()) {
          throw Error(ErrorCode::kMalformedJson,
                      "'repro_values' must hold numbers");
        }
        values.push_back(v.get<double>());
      }
      entry.repro = AggregateRuns(values, entry.metric);
    } else {
      entry.repro.metric_name = entry.metric;
      entry.repro.mean = number_field("repro_mean");
      entry.repro.std = number_field("repro_std");
      if (entry.repro.std < 0.0) {
        throw Error(ErrorCode::kInvalidArgument, "'repro_std' is negative");
      }
    }
    entries.push_back(std::move(entry));
  }
  return entries;
}

void WriteReproReportJson(const ReproReport& report, std::ostream& out) {
  ordered_json doc;
  doc["entries"] = ordered_json::array();
  for (const auto& v : report.verdicts) {
    doc["entries"].push_back({{"setting", v.entry.setting},
                              {"model", v.entry.model},
                              {"metric", v.entry.metric},
                              {"setup", v.entry.setup},
                              {"original_mean", v.entry.original_mean},
                              {"repro_mean", v.entry.repro.mean},
                              {"repro_std", v.entry.repro.std},
                              {"gap", v.gap},
                              {"reproduced", v.reproduced}});
  }
  doc["per_setting"] = ordered_json::object();
  for (const auto& [setting, count] : report.per_setting) {
    doc["per_setting"][setting] = {{"reproduced", count.reproduced},
                                   {"total", count.total}};
  }
  out << doc.dump(2) << '\n';
}

void WriteReproReportTable(const ReproReport& report, std::ostream& out) {
  std::vector<std::array<std::string, 7>> rows;
  rows.push_back({"setting", "model", "metric", "setup", "orig", "repro", ""});
  for (const auto& v : report.verdicts) {
    rows.push_back({v.entry.setting, v.entry.model, v.entry.metric,
                    v.entry.setup, Fixed(v.entry.original_mean),
                    Fixed(v.entry.repro.mean) + " (" +
                        Fixed(v.entry.repro.std) + ")",
                    v.reproduced ? "*" : ""});
  }
  std::array<std::size_t, 7> width{};
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      width[c] = std::max(width[c], row[c].size());
    }
  }
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
  for (const auto& [setting, count] : report.per_setting) {
    out << setting << ": " << count.reproduced << "/" << count.total
        << " reproduced\n";
  }
}

}  // namespace argrobust
