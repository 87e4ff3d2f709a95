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

#include "argrobust/perturb.h"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <set>

#include "json.hpp"
#include "sampling.h"

namespace argrobust {
namespace {

using nlohmann::ordered_json;
using Tokens = std::vector<std::string>;

SegmentSpan MakeSpan(const LabeledSentence& s, const Segment& seg) {
  SegmentSpan span;
  span.start = seg.start;
  span.end = seg.end;
  span.label = seg.label;
  span.tokens.assign(s.tokens.begin() + seg.start, s.tokens.begin() + seg.end);
  return span;
}

Tokens ToTokens(const ordered_json& value, const char* field) {
  if (!value.is_array()) {
    throw Error(ErrorCode::kMalformedJson,
                std::string("'") + field + "' must be an array of strings");
  }
  Tokens out;
  for (const auto& t : value) {
    if (!t.is_string()) {
      throw Error(ErrorCode::kMalformedJson,
                  std::string("'") + field + "' must be an array of strings");
    }
    out.push_back(t.get<std::string>());
  }
  return out;
}

template <typename T, typename F>
std::optional<T> OptionalField(const ordered_json& obj, const char* key,
                               F&& convert) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return std::nullopt;
  return convert(*it);
}

bool StartsWith(const Tokens& haystack, const Tokens& prefix,
                std::size_t offset = 0) {
  if (offset + prefix.size() > haystack.size()) return false;
  return std::equal(prefix.begin(), prefix.end(), haystack.begin() + offset);
}

}  // namespace

std::string_view PerturbationTestName(PerturbationTest test) {
  switch (test) {
    case PerturbationTest::kT1:
      return "T1";
    case PerturbationTest::kT2:
      return "T2";
    case PerturbationTest::kT3:
      return "T3";
  }
  return "?";
}

PerturbationTest ParsePerturbationTest(std::string_view text) {
  if (text == "T1") return PerturbationTest::kT1;
  if (text == "T2") return PerturbationTest::kT2;
  if (text == "T3") return PerturbationTest::kT3;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown perturbation test '" + std::string(text) + "'");
}

std::string_view AnnFlagName(AnnFlag flag) {
  switch (flag) {
    case AnnFlag::kAnn:
      return "ANN";
    case AnnFlag::kNonAnn:
      return "NON_ANN";
    case AnnFlag::kDiscard:
      return "DISCARD";
  }
  return "?";
}

AnnFlag ParseAnnFlag(std::string_view text) {
  if (text == "ANN") return AnnFlag::kAnn;
  if (text == "NON_ANN") return AnnFlag::kNonAnn;
  if (text == "DISCARD") return AnnFlag::kDiscard;
  throw Error(ErrorCode::kUnknownLabel,
              "unknown annotation flag '" + std::string(text) + "'");
}

std::vector<std::string> SegmentPair::JoinedTokens() const {
  const SegmentSpan& first = order == SegmentOrder::kArgFirst ? arg : non_arg;
  const SegmentSpan& second = order == SegmentOrder::kArgFirst ? non_arg : arg;
  Tokens out = first.tokens;
  out.insert(out.end(), second.tokens.begin(), second.tokens.end());
  return out;
}

std::vector<SegmentPair> ExtractAdjacentPairs(
    std::span<const LabeledSentence> sentences, OrderFilter filter) {
  std::vector<SegmentPair> pairs;
  for (const auto& s : sentences) {
    const auto segments = Segmentize(s);
    for (std::size_t i = 0; i + 1 < segments.size(); ++i) {
      const Segment& first = segments[i];
      const Segment& second = segments[i + 1];
      const bool arg_first = IsArgumentative(first.label) &&
                             !IsArgumentative(second.label) &&
                             !second.is_punct_only;
      const bool non_arg_first = !IsArgumentative(first.label) &&
                                 !first.is_punct_only &&
                                 IsArgumentative(second.label);
      if (arg_first && filter == OrderFilter::kNonArgFirst) continue;
      if (non_arg_first && filter == OrderFilter::kArgFirst) continue;
      if (!arg_first && !non_arg_first) continue;
      SegmentPair pair;
      pair.id = s.id + ":" + std::to_string(first.start) + "-" +
                std::to_string(second.end);
      pair.source_sentence_id = s.id;
      pair.topic = s.topic;
      pair.order = arg_first ? SegmentOrder::kArgFirst
                             : SegmentOrder::kNonArgFirst;
      pair.arg = MakeSpan(s, arg_first ? first : second);
      pair.non_arg = MakeSpan(s, arg_first ? second : first);
      pairs.push_back(std::move(pair));
    }
  }
  return pairs;
}

std::vector<PerturbationRecord> ReadPerturbationRecords(std::istream& in) {
  std::vector<PerturbationRecord> records;
  std::set<std::string> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    try {
      ordered_json obj;
      try {
        obj = ordered_json::parse(line);
      } catch (const ordered_json::exception& e) {
        throw Error(ErrorCode::kMalformedJson, e.what());
      }
      if (!obj.is_object()) {
        throw Error(ErrorCode::kMalformedJson, "line is not a JSON object");
      }
      for (const char* key : {"pair_id", "test", "gold_before"}) {
        if (!obj.contains(key) || !obj[key].is_string()) {
          throw Error(ErrorCode::kMalformedJson,
                      std::string("missing string field '") + key + "'");
        }
      }
      if (!obj.contains("before_tokens")) {
        throw Error(ErrorCode::kMalformedJson, "missing 'before_tokens'");
      }
      PerturbationRecord r;
      r.pair_id = obj["pair_id"].get<std::string>();
      r.test = ParsePerturbationTest(obj["test"].get<std::string>());
      r.before_tokens = ToTokens(obj["before_tokens"], "before_tokens");
      r.after_tokens = OptionalField<Tokens>(
          obj, "after_tokens",
          [](const ordered_json& v) { return ToTokens(v, "after_tokens"); });
      r.gold_before = ParseBinaryLabel(obj["gold_before"].get<std::string>());
      r.gold_after = OptionalField<BinaryLabel>(
          obj, "gold_after", [](const ordered_json& v) {
            if (!v.is_string()) {
              throw Error(ErrorCode::kMalformedJson,
                          "'gold_after' must be a string");
            }
            return ParseBinaryLabel(v.get<std::string>());
          });
      r.ann_flag = OptionalField<AnnFlag>(
          obj, "ann_flag", [](const ordered_json& v) {
            if (!v.is_string()) {
              throw Error(ErrorCode::kMalformedJson,
                          "'ann_flag' must be a string");
            }
            return ParseAnnFlag(v.get<std::string>());
          });
      r.completion_tokens = OptionalField<Tokens>(
          obj, "completion_tokens", [](const ordered_json& v) {
            return ToTokens(v, "completion_tokens");
          });
      if (obj.contains("approved")) {
        if (!obj["approved"].is_boolean()) {
          throw Error(ErrorCode::kMalformedJson, "'approved' must be a bool");
        }
        r.approved = obj["approved"].get<bool>();
      }
      if (obj.contains("topic") && obj["topic"].is_string()) {
        r.topic = obj["topic"].get<std::string>();
      }
      if (obj.contains("source_ids")) {
        r.source_ids = ToTokens(obj["source_ids"], "source_ids");
      }
      r.arg_offset = OptionalField<int>(
          obj, "arg_offset", [](const ordered_json& v) {
            if (!v.is_number_integer()) {
              throw Error(ErrorCode::kMalformedJson,
                          "'arg_offset' must be an integer");
            }
            return v.get<int>();
          });
      if (!seen.insert(r.pair_id).second) {
        throw Error(ErrorCode::kDuplicateId,
                    "duplicate pair id '" + r.pair_id + "'");
      }
      records.push_back(std::move(r));
    } catch (const Error& e) {
      throw Error(e.code(),
                  "line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return records;
}

void WritePerturbationRecords(std::span<const PerturbationRecord> records,
                              std::ostream& out) {
  for (const auto& r : records) {
    ordered_json obj;
    obj["pair_id"] = r.pair_id;
    obj["test"] = PerturbationTestName(r.test);
    obj["before_tokens"] = r.before_tokens;
    obj["after_tokens"] =
        r.after_tokens ? ordered_json(*r.after_tokens) : ordered_json(nullptr);
    obj["gold_before"] = BinaryLabelName(r.gold_before);
    obj["gold_after"] = r.gold_after
                            ? ordered_json(BinaryLabelName(*r.gold_after))
                            : ordered_json(nullptr);
    obj["ann_flag"] = r.ann_flag ? ordered_json(AnnFlagName(*r.ann_flag))
                                 : ordered_json(nullptr);
    obj["completion_tokens"] = r.completion_tokens
                                   ? ordered_json(*r.completion_tokens)
                                   : ordered_json(nullptr);
    obj["approved"] = r.approved;
    obj["topic"] = r.topic;
    obj["source_ids"] = r.source_ids;
    obj["arg_offset"] =
        r.arg_offset ? ordered_json(*r.arg_offset) : ordered_json(nullptr);
    out << obj.dump() << '\n';
  }
}

std::vector<std::string> ValidateRecord(const PerturbationRecord& r,
                                        bool final) {
  std::vector<std::string> problems;
  auto fail = [&](std::string message) {
    problems.push_back(r.pair_id + ": " + std::move(message));
  };
  if (r.before_tokens.empty()) fail("before_tokens is empty");
  if (r.gold_before != BinaryLabel::kArg) fail("gold_before must be ARG");
  if (final && !r.after_tokens) fail("after_tokens missing");
  if (final && !r.gold_after) fail("gold_after missing");
  if (r.after_tokens && r.after_tokens->empty()) fail("after_tokens is empty");
  if (r.completion_tokens) {
    if (r.ann_flag != AnnFlag::kAnn) {
      fail("completion_tokens given for a record not flagged ANN");
    }
    if (r.completion_tokens->empty()) fail("completion_tokens is empty");
  }
  if (r.arg_offset &&
      (*r.arg_offset < 0 ||
       static_cast<std::size_t>(*r.arg_offset) > r.before_tokens.size())) {
    fail("arg_offset outside before_tokens");
  }

  switch (r.test) {
    case PerturbationTest::kT1: {
      if (r.gold_after && *r.gold_after != BinaryLabel::kNonArg) {
        fail("T1 gold_after must be NON_ARG");
      }
      if (r.ann_flag == AnnFlag::kAnn && !r.completion_tokens) {
        fail("ANN record lacks completion_tokens");
      }
      if (!r.arg_offset || *r.arg_offset <= 0) {
        fail("T1 record needs a positive arg_offset (announcing prefix)");
      } else if (r.after_tokens) {
        const Tokens prefix(r.before_tokens.begin(),
                            r.before_tokens.begin() + *r.arg_offset);
        if (!StartsWith(*r.after_tokens, prefix)) {
          fail("T1 after_tokens do not start with the announcing prefix");
        }
      }
      break;
    }
    case PerturbationTest::kT2: {
      if (r.gold_after && *r.gold_after != BinaryLabel::kArg) {
        fail("T2 gold_after must be ARG");
      }
      if (r.after_tokens) {
        const Tokens& after = *r.after_tokens;
        const std::size_t n = r.before_tokens.size();
        bool ok = StartsWith(after, r.before_tokens) &&
                  after.size() > n + kT2Connector.size();
        for (std::size_t i = 0; ok && i < kT2Connector.size(); ++i) {
          ok = after[n + i] == kT2Connector[i];
        }
        if (!ok) {
          fail("T2 after_tokens must be before_tokens + 'and besides ,' + a "
               "non-empty sentence");
        }
      }
      break;
    }
    case PerturbationTest::kT3: {
      if (r.gold_after && *r.gold_after != BinaryLabel::kArg) {
        fail("T3 gold_after must be ARG");
      }
      if (r.after_tokens) {
        const std::size_t offset = r.arg_offset ? *r.arg_offset : 0;
        if (!StartsWith(r.before_tokens, *r.after_tokens, offset) ||
            r.after_tokens->size() >= r.before_tokens.size()) {
          fail("T3 after_tokens must be a proper contiguous part of "
               "before_tokens at arg_offset");
        }
      }
      break;
    }
  }
  return problems;
}

std::vector<PerturbationRecord> GenerateT1Candidates(
    std::span<const SegmentPair> pairs) {
  std::vector<PerturbationRecord> out;
  for (const auto& pair : pairs) {
    if (pair.order != SegmentOrder::kNonArgFirst) continue;
    PerturbationRecord r;
    r.pair_id = "T1:" + pair.id;
    r.test = PerturbationTest::kT1;
    r.before_tokens = pair.JoinedTokens();
    r.gold_before = BinaryLabel::kArg;
    r.topic = pair.topic;
    r.source_ids = {pair.source_sentence_id};
    r.arg_offset = static_cast<int>(pair.non_arg.tokens.size());
    out.push_back(std::move(r));
  }
  return out;
}

T1Assembly AssembleT1(std::span<const PerturbationRecord> annotated) {
  T1Assembly result;
  for (const auto& in : annotated) {
    if (in.test != PerturbationTest::kT1) {
      throw Error(ErrorCode::kInvalidArgument,
                  in.pair_id + ": not a T1 record");
    }
    if (!in.ann_flag) {
      ++result.unannotated;
      continue;
    }
    if (*in.ann_flag == AnnFlag::kDiscard) {
      ++result.discarded;
      continue;
    }
    if (*in.ann_flag == AnnFlag::kNonAnn) {
      ++result.non_ann;
      continue;
    }
    if (!in.completion_tokens || in.completion_tokens->empty()) {
      throw Error(ErrorCode::kInvalidArgument,
                  in.pair_id + ": ANN record lacks a completion");
    }
    if (!in.arg_offset || *in.arg_offset <= 0 ||
        static_cast<std::size_t>(*in.arg_offset) >= in.before_tokens.size()) {
      throw Error(ErrorCode::kInvalidArgument,
                  in.pair_id + ": ANN record lacks a valid arg_offset");
    }
    const auto split = in.before_tokens.begin() + *in.arg_offset;
    const Tokens original_arg(split, in.before_tokens.end());
    if (*in.completion_tokens == original_arg) {
      throw Error(ErrorCode::kInvalidArgument,
                  in.pair_id +
                      ": completion repeats the original ARG segment");
    }
    PerturbationRecord out = in;
    Tokens after(in.before_tokens.begin(), split);
    after.insert(after.end(), in.completion_tokens->begin(),
                 in.completion_tokens->end());
    out.after_tokens = std::move(after);
    out.gold_before = BinaryLabel::kArg;
    out.gold_after = BinaryLabel::kNonArg;
    out.approved = true;
    auto problems = ValidateRecord(out, /*final=*/true);
    if (!problems.empty()) {
      throw Error(ErrorCode::kInvalidArgument, problems.front());
    }
    ++result.per_topic[out.topic];
    result.pairs.push_back(std::move(out));
  }
  if (result.pairs.empty()) {
    result.warnings.push_back("no ANN records; the T1 set is empty");
  }
  for (const auto& [topic, count] : result.per_topic) {
    if (count < kT1TargetPerTopic) {
      result.warnings.push_back("topic '" + topic + "' has " +
                                std::to_string(count) + " T1 pairs, target " +
                                std::to_string(kT1TargetPerTopic));
    }
  }
  return result;
}

std::vector<PerturbationRecord> GenerateT2(
    std::span<const LabeledSentence> sentences, const T2Options& options) {
  std::vector<PerturbationRecord> out;
  if (options.count_per_topic == 0) return out;

  struct ArgSegment {
    const LabeledSentence* sentence;
    Segment segment;
  };
  std::map<int, std::vector<ArgSegment>> arg_segments;
  std::map<int, std::vector<const LabeledSentence*>> pure_non_arg;
  std::map<int, std::string> topic_names;
  for (const auto& s : sentences) {
    topic_names[s.topic_index] = s.topic;
    bool any_arg = false;
    for (const Segment& seg : Segmentize(s)) {
      if (!IsArgumentative(seg.label)) continue;
      any_arg = true;
      if (static_cast<std::size_t>(seg.length()) >= options.min_arg_tokens) {
        arg_segments[s.topic_index].push_back({&s, seg});
      }
    }
    if (!any_arg) pure_non_arg[s.topic_index].push_back(&s);
  }

  for (const auto& [topic, name] : topic_names) {
    auto args = arg_segments.find(topic);
    if (args == arg_segments.end() || args->second.empty()) continue;
    auto nons = pure_non_arg.find(topic);
    if (nons == pure_non_arg.end() || nons->second.empty()) {
      throw Error(ErrorCode::kInsufficientData,
                  "topic '" + name + "' has no pure non-ARG sentence for T2");
    }
    internal::SeededStream stream(options.seed, "t2:" + name);
    const auto chosen_args =
        internal::SampleWithoutReplacement(args->second,
                                           options.count_per_topic, stream);
    const auto chosen_nons = internal::SampleWithoutReplacement(
        nons->second, chosen_args.size(), stream);
    const std::size_t k = std::min(chosen_args.size(), chosen_nons.size());
    for (std::size_t i = 0; i < k; ++i) {
      const auto& [sentence, seg] = chosen_args[i];
      const LabeledSentence& non = *chosen_nons[i];
      PerturbationRecord r;
      r.pair_id = "T2:" + sentence->id + ":" + std::to_string(seg.start) +
                  "-" + std::to_string(seg.end) + "+" + non.id;
      r.test = PerturbationTest::kT2;
      r.before_tokens.assign(sentence->tokens.begin() + seg.start,
                             sentence->tokens.begin() + seg.end);
      Tokens after = r.before_tokens;
      for (std::string_view c : kT2Connector) after.emplace_back(c);
      after.insert(after.end(), non.tokens.begin(), non.tokens.end());
      r.after_tokens = std::move(after);
      r.gold_before = BinaryLabel::kArg;
      r.gold_after = BinaryLabel::kArg;
      r.topic = name;
      r.source_ids = {sentence->id, non.id};
      r.arg_offset = 0;
      out.push_back(std::move(r));
    }
  }
  return out;
}

T3Balance MeasureT3Balance(std::span<const PerturbationRecord> records) {
  T3Balance balance;
  for (const auto& r : records) {
    if (r.arg_offset.value_or(0) == 0) {
      ++balance.arg_first;
    } else {
      ++balance.non_arg_first;
    }
    ++balance.per_topic[r.topic];
  }
  return balance;
}

bool WithinBalance(const T3Balance& balance, double tolerance) {
  const double total =
      static_cast<double>(balance.arg_first + balance.non_arg_first);
  const double slack = tolerance * total + 1e-9;
  const double order_gap =
      std::abs(static_cast<double>(balance.arg_first) -
               static_cast<double>(balance.non_arg_first));
  if (order_gap > slack) return false;
  if (balance.per_topic.size() > 1) {
    auto [lo, hi] = std::minmax_element(
        balance.per_topic.begin(), balance.per_topic.end(),
        [](const auto& a, const auto& b) { return a.second < b.second; });
    if (static_cast<double>(hi->second - lo->second) > slack) return false;
  }
  return true;
}

std::vector<PerturbationRecord> GenerateT3(
    std::span<const LabeledSentence> sentences, const T3Options& options) {
  std::vector<PerturbationRecord> out;
  if (options.count == 0) return out;
  const auto pairs = ExtractAdjacentPairs(sentences, OrderFilter::kBoth);
  if (pairs.size() < options.count) {
    throw Error(ErrorCode::kInsufficientData,
                "T3 needs " + std::to_string(options.count) +
                    " pairs but only " + std::to_string(pairs.size()) +
                    " exist");
  }

  // Cells are (topic, order), topic-major in topic index order.
  std::map<int, std::string> topic_names;
  for (const auto& s : sentences) topic_names[s.topic_index] = s.topic;
  std::map<std::string, int> topic_rank;
  for (const auto& [index, name] : topic_names) {
    topic_rank.emplace(name, static_cast<int>(topic_rank.size()));
  }
  const std::size_t n_cells = topic_names.size() * 2;
  std::vector<std::vector<const SegmentPair*>> cells(n_cells);
  for (const auto& pair : pairs) {
    const std::size_t cell = topic_rank.at(pair.topic) * 2 +
                             (pair.order == SegmentOrder::kArgFirst ? 0 : 1);
    cells[cell].push_back(&pair);
  }

  std::vector<std::vector<const SegmentPair*>> shuffled(n_cells);
  std::vector<std::size_t> quota(n_cells, options.count / n_cells);
  // Remainder alternates orders across topics.
  for (std::size_t k = 0; k < options.count % n_cells; ++k) {
    const std::size_t topic = k % topic_names.size();
    const std::size_t order = (k / topic_names.size() + topic) % 2;
    ++quota[topic * 2 + order];
  }
  std::vector<std::size_t> taken(n_cells, 0);
  std::size_t total = 0;
  for (std::size_t c = 0; c < n_cells; ++c) {
    const std::string purpose = "t3:" + std::to_string(c);
    internal::SeededStream stream(options.seed, purpose);
    shuffled[c] = internal::SampleWithoutReplacement(cells[c], cells[c].size(),
                                                     stream);
    taken[c] = std::min(quota[c], shuffled[c].size());
    total += taken[c];
  }
  // Fill any shortfall round-robin from cells with leftovers.
  while (total < options.count) {
    bool progressed = false;
    for (std::size_t c = 0; c < n_cells && total < options.count; ++c) {
      if (taken[c] < shuffled[c].size()) {
        ++taken[c];
        ++total;
        progressed = true;
      }
    }
    if (!progressed) break;
  }

  for (std::size_t c = 0; c < n_cells; ++c) {
    for (std::size_t i = 0; i < taken[c]; ++i) {
      const SegmentPair& pair = *shuffled[c][i];
      PerturbationRecord r;
      r.pair_id = "T3:" + pair.id;
      r.test = PerturbationTest::kT3;
      r.before_tokens = pair.JoinedTokens();
      r.after_tokens = pair.arg.tokens;
      r.gold_before = BinaryLabel::kArg;
      r.gold_after = BinaryLabel::kArg;
      r.topic = pair.topic;
      r.source_ids = {pair.source_sentence_id};
      r.arg_offset = pair.order == SegmentOrder::kArgFirst
                         ? 0
                         : static_cast<int>(pair.non_arg.tokens.size());
      out.push_back(std::move(r));
    }
  }

  T3Balance balance = MeasureT3Balance(out);
  for (const auto& [index, name] : topic_names) balance.per_topic[name] += 0;
  if (!WithinBalance(balance, options.balance_tolerance)) {
    throw Error(ErrorCode::kInsufficientData,
                "T3 sample of " + std::to_string(out.size()) +
                    " pairs is unbalanced (" +
                    std::to_string(balance.arg_first) + " ARG-first vs " +
                    std::to_string(balance.non_arg_first) +
                    " non-ARG-first, or uneven topics)");
  }
  return out;
}

std::string BeforeId(std::string_view pair_id) {
  return std::string(pair_id) + "/before";
}

std::string AfterId(std::string_view pair_id) {
  return std::string(pair_id) + "/after";
}

PerturbationEvaluation EvaluatePerturbation(
    std::span<const PerturbationRecord> pairs, const PredictionSet& predictions,
    Seed seed) {
  if (pairs.empty()) {
    throw Error(ErrorCode::kEmptyInput, "no perturbation pairs to evaluate");
  }
  if (predictions.runs.empty()) {
    throw Error(ErrorCode::kMissingPrediction, "no prediction runs");
  }
  PerturbationEvaluation eval;
  eval.test = pairs.front().test;
  for (const auto& p : pairs) {
    if (p.test != eval.test) {
      throw Error(ErrorCode::kInvalidArgument,
                  "pairs mix tests " +
                      std::string(PerturbationTestName(eval.test)) + " and " +
                      std::string(PerturbationTestName(p.test)));
    }
    auto problems = ValidateRecord(p, /*final=*/true);
    if (!problems.empty()) {
      throw Error(ErrorCode::kInvalidArgument, problems.front());
    }
  }

  auto predict = [&](const RunPredictions& run, const std::string& id,
                     std::size_t n_tokens) {
    const PredictionRecord& record = RequirePrediction(run, id);
    if (const auto* tokens = std::get_if<std::vector<Label>>(&record.payload)) {
      if (tokens->size() != n_tokens) {
        throw Error(ErrorCode::kLengthMismatch,
                    "prediction for '" + id + "' has " +
                        std::to_string(tokens->size()) + " labels, expected " +
                        std::to_string(n_tokens));
      }
    }
    return Binarize(ResolveSentenceLabel(record, seed));
  };

  std::vector<double> before_acc, after_acc, deltas;
  for (const auto& [run_id, run] : predictions.runs) {
    std::vector<BinaryLabel> gold_b, gold_a, pred_b, pred_a;
    for (const auto& p : pairs) {
      gold_b.push_back(p.gold_before);
      gold_a.push_back(*p.gold_after);
      pred_b.push_back(predict(run, BeforeId(p.pair_id), p.before_tokens.size()));
      pred_a.push_back(predict(run, AfterId(p.pair_id), p.after_tokens->size()));
    }
    PerturbationReport report =
        DeltaAcc(Accuracy(gold_b, pred_b), Accuracy(gold_a, pred_a));
    eval.runs.push_back(run_id);
    eval.per_run.push_back(report);
    before_acc.push_back(report.acc_before);
    after_acc.push_back(report.acc_after);
    deltas.push_back(report.delta_abs);
  }
  eval.before = AggregateRuns(before_acc, "acc_before");
  eval.after = AggregateRuns(after_acc, "acc_after");
  eval.delta_abs = AggregateRuns(deltas, "delta_abs");
  eval.of_means = DeltaAcc(eval.before.mean, eval.after.mean);
  return eval;
}

}  // namespace argrobust
