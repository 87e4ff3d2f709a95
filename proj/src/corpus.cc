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

#include "argrobust/corpus.h"

#include <unicode/uchar.h>
#include <unicode/utf8.h>

#include <algorithm>
#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>
#include <utility>

#include "json.hpp"

namespace argrobust {
namespace {

using nlohmann::json;

constexpr int kInDomainTopics = 6;
constexpr int kCrossDomainTrainTopics = 5;
constexpr int kCrossDomainDevTopic = 5;

void ValidateSentence(const LabeledSentence& s) {
  if (s.id.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "sentence id is empty");
  }
  if (s.tokens.empty()) {
    throw Error(ErrorCode::kLengthMismatch,
                "sentence '" + s.id + "' has no tokens");
  }
  if (s.tokens.size() != s.labels.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                "sentence '" + s.id + "' has " +
                    std::to_string(s.tokens.size()) + " tokens but " +
                    std::to_string(s.labels.size()) + " labels");
  }
  for (const auto& token : s.tokens) {
    if (token.empty()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "sentence '" + s.id + "' contains an empty token");
    }
  }
}

LabeledSentence SentenceFromJson(const json& obj) {
  if (!obj.is_object()) {
    throw Error(ErrorCode::kMalformedJson, "line is not a JSON object");
  }
  auto require = [&](const char* key) -> const json& {
    auto it = obj.find(key);
    if (it == obj.end()) {
      throw Error(ErrorCode::kMalformedJson,
                  std::string("missing field '") + key + "'");
    }
    return *it;
  };
  const json& id = require("id");
  const json& topic = require("topic");
  const json& tokens = require("tokens");
  const json& labels = require("labels");
  if (!id.is_string() || !topic.is_string() || !tokens.is_array() ||
      !labels.is_array()) {
    throw Error(ErrorCode::kMalformedJson, "field has the wrong JSON type");
  }
  LabeledSentence s;
  s.id = id.get<std::string>();
  s.topic = topic.get<std::string>();
  for (const auto& t : tokens) {
    if (!t.is_string()) {
      throw Error(ErrorCode::kMalformedJson, "token is not a string");
    }
    s.tokens.push_back(t.get<std::string>());
  }
  for (const auto& l : labels) {
    if (!l.is_string()) {
      throw Error(ErrorCode::kMalformedJson, "label is not a string");
    }
    s.labels.push_back(ParseLabel(l.get<std::string>()));
  }
  return s;
}

std::vector<std::string> SplitTabs(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t tab = line.find('\t', start);
    if (tab == std::string::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
  return fields;
}

void StripCarriageReturn(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

bool IsBlank(const std::string& line) {
  return std::all_of(line.begin(), line.end(),
                     [](unsigned char c) { return std::isspace(c); });
}

// Adds a parsed sentence, recording the failure instead of throwing when
// not strict.
void AddOrRecord(CorpusParseResult& result, LabeledSentence sentence,
                 std::size_t line, const ParseOptions& options) {
  try {
    result.corpus.Add(std::move(sentence));
  } catch (const Error& e) {
    if (options.strict) {
      throw Error(e.code(),
                  "line " + std::to_string(line) + ": " + e.what());
    }
    result.errors.push_back({line, e.code(), e.what()});
  }
}

}  // namespace

TopicRegistry::TopicRegistry(std::vector<std::string> names)
    : names_(std::move(names)) {}

TopicRegistry TopicRegistry::Aurc8() {
  return TopicRegistry({"abortion", "cloning", "marijuana legalization",
                        "minimum wage", "nuclear energy", "death penalty",
                        "gun control", "school uniforms"});
}

std::optional<int> TopicRegistry::IndexOf(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return static_cast<int>(i);
  }
  return std::nullopt;
}

const LabeledSentence& Corpus::Add(LabeledSentence sentence,
                                   bool assign_position) {
  ValidateSentence(sentence);
  auto topic = topics_.IndexOf(sentence.topic);
  if (!topic) {
    throw Error(ErrorCode::kUnknownTopic,
                "unknown topic '" + sentence.topic + "'");
  }
  if (by_id_.count(sentence.id)) {
    throw Error(ErrorCode::kDuplicateId,
                "duplicate sentence id '" + sentence.id + "'");
  }
  if (next_position_.size() < static_cast<std::size_t>(topics_.size())) {
    next_position_.resize(topics_.size(), 0);
  }
  sentence.topic_index = *topic;
  if (assign_position) {
    sentence.position = next_position_[*topic]++;
  } else {
    next_position_[*topic] =
        std::max(next_position_[*topic], sentence.position + 1);
  }
  by_id_.emplace(sentence.id, sentences_.size());
  sentences_.push_back(std::move(sentence));
  return sentences_.back();
}

const LabeledSentence* Corpus::Find(std::string_view id) const {
  auto it = by_id_.find(std::string(id));
  return it == by_id_.end() ? nullptr : &sentences_[it->second];
}

CorpusParseResult ParseCorpus(std::istream& in, const TopicRegistry& topics,
                              const ParseOptions& options) {
  CorpusParseResult result{Corpus(topics), {}, {}};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    StripCarriageReturn(line);
    if (IsBlank(line)) continue;
    LabeledSentence sentence;
    try {
      json obj;
      try {
        obj = json::parse(line);
      } catch (const json::exception& e) {
        throw Error(ErrorCode::kMalformedJson, e.what());
      }
      sentence = SentenceFromJson(obj);
    } catch (const Error& e) {
      if (options.strict) {
        throw Error(e.code(),
                    "line " + std::to_string(line_no) + ": " + e.what());
      }
      result.errors.push_back({line_no, e.code(), e.what()});
      continue;
    }
    AddOrRecord(result, std::move(sentence), line_no, options);
  }
  if (in.bad()) throw Error(ErrorCode::kIo, "failed reading corpus stream");
  if (result.corpus.empty() && result.errors.empty()) {
    result.warnings.push_back("corpus is empty");
  }
  return result;
}

Corpus ParseCorpusOrThrow(std::istream& in, const TopicRegistry& topics) {
  return ParseCorpus(in, topics, ParseOptions{.strict = true}).corpus;
}

void WriteCorpus(const Corpus& corpus, std::ostream& out) {
  for (const auto& s : corpus.sentences()) {
    nlohmann::ordered_json labels = nlohmann::ordered_json::array();
    for (Label l : s.labels) labels.push_back(LabelName(l));
    nlohmann::ordered_json obj = {{"id", s.id},
                {"topic", s.topic},
                {"tokens", s.tokens},
                {"labels", labels}};
    out << obj.dump() << '\n';
  }
}

CorpusParseResult ParseTsvCorpus(std::istream& in, const TopicRegistry& topics,
                                 const TsvColumnMapping& mapping,
                                 const ParseOptions& options) {
  CorpusParseResult result{Corpus(topics), {}, {}};
  std::string line;
  std::size_t line_no = 0;
  int id_col = -1, topic_col = -1, token_col = -1, label_col = -1;
  std::size_t width = 0;

  // Header.
  while (std::getline(in, line)) {
    ++line_no;
    StripCarriageReturn(line);
    if (IsBlank(line)) continue;
    auto header = SplitTabs(line);
    width = header.size();
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (header[i] == mapping.id_column) id_col = static_cast<int>(i);
      if (header[i] == mapping.topic_column) topic_col = static_cast<int>(i);
      if (header[i] == mapping.token_column) token_col = static_cast<int>(i);
      if (header[i] == mapping.label_column) label_col = static_cast<int>(i);
    }
    if (id_col < 0 || topic_col < 0 || token_col < 0 || label_col < 0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "TSV header lacks one of the mapped columns '" +
                      mapping.id_column + "', '" + mapping.topic_column +
                      "', '" + mapping.token_column + "', '" +
                      mapping.label_column + "'");
    }
    break;
  }
  if (width == 0) {
    result.warnings.push_back("corpus is empty");
    return result;
  }

  LabeledSentence current;
  std::size_t current_line = 0;
  bool current_bad = false;
  std::vector<std::string> raw_labels;

  auto flush = [&]() {
    if (current.id.empty()) return;
    if (!current_bad) {
      try {
        for (const auto& raw : raw_labels) {
          auto alias = mapping.label_aliases.find(raw);
          current.labels.push_back(ParseLabel(
              alias == mapping.label_aliases.end() ? raw : alias->second));
        }
      } catch (const Error& e) {
        if (options.strict) {
          throw Error(e.code(), "line " + std::to_string(current_line) +
                                    ": " + e.what());
        }
        result.errors.push_back({current_line, e.code(), e.what()});
        current_bad = true;
      }
      if (!current_bad) {
        AddOrRecord(result, std::move(current), current_line, options);
      }
    }
    current = LabeledSentence();
    raw_labels.clear();
    current_bad = false;
  };

  while (std::getline(in, line)) {
    ++line_no;
    StripCarriageReturn(line);
    if (IsBlank(line)) continue;
    auto fields = SplitTabs(line);
    if (fields.size() != width) {
      Error e(ErrorCode::kMalformedJson,
              "expected " + std::to_string(width) + " columns, got " +
                  std::to_string(fields.size()));
      if (options.strict) {
        throw Error(e.code(),
                    "line " + std::to_string(line_no) + ": " + e.what());
      }
      result.errors.push_back({line_no, e.code(), e.what()});
      if (!current.id.empty() && fields.size() > static_cast<std::size_t>(id_col) &&
          fields[id_col] == current.id) {
        current_bad = true;
      }
      continue;
    }
    const std::string& id = fields[id_col];
    if (id != current.id) {
      flush();
      current.id = id;
      current.topic = fields[topic_col];
      current_line = line_no;
    } else if (fields[topic_col] != current.topic && !current_bad) {
      Error e(ErrorCode::kUnknownTopic,
              "topic changes within sentence '" + id + "'");
      if (options.strict) {
        throw Error(e.code(),
                    "line " + std::to_string(line_no) + ": " + e.what());
      }
      result.errors.push_back({line_no, e.code(), e.what()});
      current_bad = true;
    }
    current.tokens.push_back(fields[token_col]);
    raw_labels.push_back(fields[label_col]);
  }
  flush();
  if (in.bad()) throw Error(ErrorCode::kIo, "failed reading TSV stream");
  if (result.corpus.empty() && result.errors.empty()) {
    result.warnings.push_back("corpus is empty");
  }
  return result;
}

bool IsPunctuationToken(std::string_view token) {
  if (token.empty()) return false;
  const auto* bytes = reinterpret_cast<const uint8_t*>(token.data());
  const int32_t length = static_cast<int32_t>(token.size());
  int32_t offset = 0;
  while (offset < length) {
    UChar32 c;
    U8_NEXT(bytes, offset, length, c);
    if (c < 0 || !u_ispunct(c)) return false;
  }
  return true;
}

std::vector<Segment> Segmentize(const LabeledSentence& sentence) {
  std::vector<Segment> segments;
  const int n = static_cast<int>(sentence.labels.size());
  int start = 0;
  while (start < n) {
    int end = start + 1;
    while (end < n && sentence.labels[end] == sentence.labels[start]) ++end;
    Segment seg{sentence.labels[start], start, end, true};
    for (int i = start; i < end; ++i) {
      if (!IsPunctuationToken(sentence.tokens[i])) {
        seg.is_punct_only = false;
        break;
      }
    }
    segments.push_back(seg);
    start = end;
  }
  return segments;
}

std::string_view SplitSchemeName(SplitScheme scheme) {
  return scheme == SplitScheme::kInDomain ? "in-domain" : "cross-domain";
}

SplitScheme ParseSplitScheme(std::string_view text) {
  if (text == "in-domain") return SplitScheme::kInDomain;
  if (text == "cross-domain") return SplitScheme::kCrossDomain;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown split scheme '" + std::string(text) + "'");
}

std::string_view SplitName(Split split) {
  switch (split) {
    case Split::kTrain:
      return "train";
    case Split::kDev:
      return "dev";
    case Split::kTest:
      return "test";
  }
  return "?";
}

std::optional<Split> SplitAssignment::Of(std::string_view id) const {
  auto it = map.find(std::string(id));
  if (it == map.end()) return std::nullopt;
  return it->second;
}

SplitAssignment AssignSplits(const Corpus& corpus, SplitScheme scheme) {
  SplitAssignment out;
  out.scheme = scheme;
  const auto& sentences = corpus.sentences();
  const int n_topics = corpus.topics().size();

  if (scheme == SplitScheme::kCrossDomain) {
    for (const auto& s : sentences) {
      Split split = s.topic_index < kCrossDomainTrainTopics ? Split::kTrain
                    : s.topic_index == kCrossDomainDevTopic ? Split::kDev
                                                            : Split::kTest;
      out.map.emplace(s.id, split);
    }
    return out;
  }

  std::vector<std::vector<const LabeledSentence*>> by_topic(n_topics);
  std::size_t unassigned = 0;
  for (const auto& s : sentences) {
    if (s.topic_index < kInDomainTopics) {
      by_topic[s.topic_index].push_back(&s);
    } else {
      ++unassigned;
    }
  }
  for (int t = 0; t < n_topics && t < kInDomainTopics; ++t) {
    auto& members = by_topic[t];
    if (members.empty()) continue;
    std::stable_sort(members.begin(), members.end(),
                     [](const LabeledSentence* a, const LabeledSentence* b) {
                       return a->position < b->position;
                     });
    const std::size_t n = members.size();
    if (n < 10) {
      out.warnings.push_back("topic '" + corpus.topics().Name(t) + "' has only " +
                             std::to_string(n) +
                             " sentences; split percentages degenerate");
    }
    const std::size_t train_end = n * 7 / 10;
    const std::size_t dev_end = n * 8 / 10;
    for (std::size_t i = 0; i < n; ++i) {
      Split split = i < train_end ? Split::kTrain
                    : i < dev_end ? Split::kDev
                                  : Split::kTest;
      out.map.emplace(members[i]->id, split);
    }
  }
  if (unassigned > 0) {
    out.warnings.push_back(std::to_string(unassigned) +
                           " sentences from topics outside the in-domain set "
                           "are left unassigned");
  }
  return out;
}

DedupResult Deduplicate(const Corpus& corpus,
                        const SplitAssignment& assignment) {
  const auto& sentences = corpus.sentences();
  std::vector<std::size_t> order(sentences.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto& x = sentences[a];
    const auto& y = sentences[b];
    if (x.topic_index != y.topic_index) return x.topic_index < y.topic_index;
    return x.position < y.position;
  });

  std::unordered_map<std::string, std::string> first_by_tokens;
  std::vector<bool> dropped(sentences.size(), false);
  DedupResult result{Corpus(corpus.topics()), assignment, {}};
  for (std::size_t i : order) {
    const auto& s = sentences[i];
    if (!assignment.Of(s.id)) continue;
    std::string key;
    for (const auto& token : s.tokens) {
      key += token;
      key += '\x1f';
    }
    auto [it, inserted] = first_by_tokens.emplace(std::move(key), s.id);
    if (!inserted) {
      dropped[i] = true;
      result.removals.push_back({s.id, it->second});
      result.assignment.map.erase(s.id);
    }
  }
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    if (!dropped[i]) result.corpus.Add(sentences[i], /*assign_position=*/false);
  }
  return result;
}

namespace {
double Percent(std::size_t part, std::size_t whole) {
  return whole == 0 ? 0.0 : 100.0 * static_cast<double>(part) / whole;
}
}  // namespace

double CorpusStats::arg_pct() const { return Percent(arg, total); }
double CorpusStats::non_arg_pct() const { return Percent(non_arg, total); }
double CorpusStats::pro_only_pct() const { return Percent(pro_only, arg); }
double CorpusStats::con_only_pct() const { return Percent(con_only, arg); }
double CorpusStats::mixed_pct() const { return Percent(mixed, arg); }

CorpusStats ComputeCorpusStats(std::span<const LabeledSentence> sentences) {
  CorpusStats stats;
  for (const auto& s : sentences) {
    ++stats.total;
    bool has_pro = false, has_con = false, has_non = false;
    for (const Segment& seg : Segmentize(s)) {
      switch (seg.label) {
        case Label::kPro:
          has_pro = true;
          break;
        case Label::kCon:
          has_con = true;
          break;
        case Label::kNon:
          if (!seg.is_punct_only) has_non = true;
          break;
      }
    }
    if (!has_pro && !has_con) {
      ++stats.non_arg;
      continue;
    }
    ++stats.arg;
    if (has_pro && !has_con && !has_non) {
      ++stats.pro_only;
    } else if (has_con && !has_pro && !has_non) {
      ++stats.con_only;
    } else {
      ++stats.mixed;
    }
  }
  return stats;
}

std::vector<LabeledSentence> SelectSplit(const Corpus& corpus,
                                         const SplitAssignment& assignment,
                                         Split split) {
  std::vector<LabeledSentence> out;
  for (const auto& s : corpus.sentences()) {
    auto assigned = assignment.Of(s.id);
    if (assigned && *assigned == split) out.push_back(s);
  }
  return out;
}

}  // namespace argrobust
