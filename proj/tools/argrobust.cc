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

// argrobust: corpus ingestion, evaluation, perturbation and subpopulation
// tests for argument unit recognition.

#include <omp.h>

#include <cctype>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "argrobust/corpus.h"
#include "argrobust/labelalg.h"
#include "argrobust/labels.h"
#include "argrobust/metrics.h"
#include "argrobust/perturb.h"
#include "argrobust/reprogate.h"
#include "argrobust/subpop.h"
#include "json.hpp"

namespace argrobust {
namespace {

using nlohmann::ordered_json;

struct GlobalOptions {
  std::uint64_t seed = 0;
  std::string scheme = "in-domain";
  std::string labels = "3class";
  std::string oov = "skip";
  std::string punct = "ignore";
  int threads = 0;
  bool strict = false;
};

std::ifstream OpenInput(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open '" + path + "'");
  return in;
}

// Writes to `path`, or stdout when it is empty or "-".
void WriteOutput(const std::string& path,
                 const std::function<void(std::ostream&)>& body) {
  if (path.empty() || path == "-") {
    body(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot write '" + path + "'");
  body(out);
  if (!out) throw Error(ErrorCode::kIo, "failed writing '" + path + "'");
}

void WriteJson(const std::string& path, const ordered_json& doc) {
  WriteOutput(path, [&](std::ostream& out) { out << doc.dump(2) << '\n'; });
}

std::string Fixed(double v, int digits = 3) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

std::string Signed(double v, int digits = 3) {
  return (v >= 0 ? "+" : "") + Fixed(v, digits);
}

Corpus LoadCorpus(const std::string& path) {
  auto in = OpenInput(path);
  return ParseCorpusOrThrow(in);
}

LabelSpace ParseLabelSpace(const std::string& text) {
  if (text == "3class") return LabelSpace::kThreeClass;
  if (text == "binary") return LabelSpace::kBinary;
  throw Error(ErrorCode::kInvalidArgument, "unknown label space '" + text + "'");
}

PunctMode ParsePunctMode(const std::string& text) {
  if (text == "ignore") return PunctMode::kIgnore;
  if (text == "include") return PunctMode::kInclude;
  throw Error(ErrorCode::kInvalidArgument, "unknown punct mode '" + text + "'");
}

// Corpus after split assignment and duplicate removal.
struct Prepared {
  Corpus corpus;
  SplitAssignment assignment;
  std::size_t removed = 0;
};

Prepared Prepare(const std::string& corpus_path, const GlobalOptions& g) {
  Corpus corpus = LoadCorpus(corpus_path);
  const auto scheme = ParseSplitScheme(g.scheme);
  auto assignment = AssignSplits(corpus, scheme);
  for (const auto& w : assignment.warnings) std::cerr << "warning: " << w << '\n';
  auto dedup = Deduplicate(corpus, assignment);
  return {std::move(dedup.corpus), std::move(dedup.assignment),
          dedup.removals.size()};
}

std::vector<LabeledSentence> Select(const Prepared& p, const std::string& split) {
  if (split == "all") return p.corpus.sentences();
  for (Split s : {Split::kTrain, Split::kDev, Split::kTest}) {
    if (SplitName(s) == split) return SelectSplit(p.corpus, p.assignment, s);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown split '" + split + "'");
}

ordered_json DistributionJson(const ScoreDistribution& d) {
  return {{"mean", d.mean}, {"std", d.std}, {"values", d.values}};
}

// ---- ingest ---------------------------------------------------------------

struct IngestArgs {
  std::string input, output, report, format = "jsonl";
  TsvColumnMapping mapping;
  std::vector<std::string> aliases;
};

int RunIngest(const IngestArgs& a, const GlobalOptions& g) {
  auto in = OpenInput(a.input);
  const ParseOptions options{.strict = g.strict};
  CorpusParseResult result;
  if (a.format == "jsonl") {
    result = ParseCorpus(in, TopicRegistry::Aurc8(), options);
  } else if (a.format == "tsv") {
    TsvColumnMapping mapping = a.mapping;
    for (const auto& alias : a.aliases) {
      const auto eq = alias.find('=');
      if (eq == std::string::npos) {
        throw Error(ErrorCode::kInvalidArgument,
                    "label alias must look like FROM=TO: '" + alias + "'");
      }
      mapping.label_aliases[alias.substr(0, eq)] = alias.substr(eq + 1);
    }
    result = ParseTsvCorpus(in, TopicRegistry::Aurc8(), mapping, options);
  } else {
    throw Error(ErrorCode::kInvalidArgument, "unknown format '" + a.format + "'");
  }
  for (const auto& w : result.warnings) std::cerr << "warning: " << w << '\n';
  for (const auto& e : result.errors) {
    std::cerr << "error: line " << e.line << ": " << e.message << '\n';
  }
  WriteOutput(a.output,
              [&](std::ostream& out) { WriteCorpus(result.corpus, out); });

  ordered_json report = {{"sentences", result.corpus.size()},
                         {"errors", ordered_json::array()},
                         {"warnings", result.warnings}};
  for (const auto& e : result.errors) {
    report["errors"].push_back({{"line", e.line},
                                {"code", ErrorCodeName(e.code)},
                                {"message", e.message}});
  }
  if (!a.report.empty()) WriteJson(a.report, report);
  return 0;
}

// ---- stats ----------------------------------------------------------------

ordered_json StatsJson(const CorpusStats& s) {
  return {{"total", s.total},
          {"arg", s.arg},
          {"arg_pct", s.arg_pct()},
          {"non_arg", s.non_arg},
          {"non_arg_pct", s.non_arg_pct()},
          {"pro_only", s.pro_only},
          {"pro_only_pct", s.pro_only_pct()},
          {"con_only", s.con_only},
          {"con_only_pct", s.con_only_pct()},
          {"mixed", s.mixed},
          {"mixed_pct", s.mixed_pct()}};
}

int RunStats(const std::string& corpus_path, const std::string& output,
             const GlobalOptions& g) {
  const Corpus corpus = LoadCorpus(corpus_path);
  const Prepared p = Prepare(corpus_path, g);
  ordered_json doc;
  doc["corpus"] = StatsJson(ComputeCorpusStats(corpus.sentences()));
  doc["scheme"] = g.scheme;
  doc["duplicates_removed"] = p.removed;
  ordered_json splits = ordered_json::object();
  for (int t = 0; t < corpus.topics().size(); ++t) {
    std::map<std::string, std::size_t> counts;
    for (const auto& s : p.corpus.sentences()) {
      if (s.topic_index != t) continue;
      if (auto split = p.assignment.Of(s.id)) ++counts[std::string(SplitName(*split))];
    }
    if (counts.empty()) continue;
    ordered_json row;
    for (Split s : {Split::kTrain, Split::kDev, Split::kTest}) {
      const std::string name(SplitName(s));
      row[name] = counts[name];
    }
    splits[corpus.topics().Name(t)] = row;
  }
  doc["splits"] = splits;
  WriteJson(output, doc);
  return 0;
}

// ---- evaluate -------------------------------------------------------------

int RunEvaluate(const std::string& corpus_path, const std::string& predictions_path,
                const std::string& split, const std::string& output, bool table,
                const GlobalOptions& g) {
  const Prepared p = Prepare(corpus_path, g);
  const auto gold = Select(p, split);
  if (gold.empty()) {
    throw Error(ErrorCode::kEmptyInput, "split '" + split + "' is empty");
  }
  auto in = OpenInput(predictions_path);
  const PredictionSet predictions = ParsePredictions(in);
  if (predictions.runs.empty()) {
    throw Error(ErrorCode::kMissingPrediction, "predictions file is empty");
  }
  const LabelSpace space = ParseLabelSpace(g.labels);
  const Seed seed{g.seed};

  std::vector<double> tok, sent, seg;
  ordered_json runs = ordered_json::array();
  for (const auto& [run_id, run] : predictions.runs) {
    tok.push_back(TokenF1(gold, run, space));
    sent.push_back(SentenceF1(gold, run, space, seed));
    seg.push_back(SegmentF1(gold, run));
    runs.push_back({{"run", run_id},
                    {"token_f1", tok.back()},
                    {"sentence_f1", sent.back()},
                    {"segment_f1", seg.back()}});
  }
  const auto dt = AggregateRuns(tok, "token_f1");
  const auto ds = AggregateRuns(sent, "sentence_f1");
  const auto dg = AggregateRuns(seg, "segment_f1");
  ordered_json doc = {{"scheme", g.scheme},
                      {"split", split},
                      {"labels", g.labels},
                      {"sentences", gold.size()},
                      {"runs", runs},
                      {"aggregate",
                       {{"token_f1", DistributionJson(dt)},
                        {"sentence_f1", DistributionJson(ds)},
                        {"segment_f1", DistributionJson(dg)}}}};
  if (table) {
    WriteOutput(output, [&](std::ostream& out) {
      out << "metric       mean   std\n";
      for (const auto* d : {&dt, &ds, &dg}) {
        out << std::left << std::setw(12) << d->metric_name << ' '
            << Fixed(d->mean) << "  " << Fixed(d->std) << '\n';
      }
    });
  } else {
    WriteJson(output, doc);
  }
  return 0;
}

// ---- baseline -------------------------------------------------------------

int RunBaseline(const std::string& corpus_path,
                const std::vector<std::string>& pair_files, int n_runs,
                const std::string& output, const GlobalOptions& g) {
  const Prepared p = Prepare(corpus_path, g);
  const auto train = SelectSplit(p.corpus, p.assignment, Split::kTrain);
  if (train.empty()) {
    throw Error(ErrorCode::kInsufficientData, "corpus has no training split");
  }
  const Seed seed{g.seed};
  std::map<Label, std::size_t> counts;
  for (const auto& s : train) ++counts[DeriveSentenceLabel(s.labels, seed, s.id)];
  // Ties go to the first label in PRO, CON, NON order.
  Label majority = Label::kNon;
  std::size_t best = 0;
  for (Label l : kAllLabels) {
    if (counts[l] > best) {
      best = counts[l];
      majority = l;
    }
  }
  std::cerr << "baseline: majority train label " << LabelName(majority) << " ("
            << best << " of " << train.size() << ")\n";

  std::vector<std::string> ids;
  for (const auto& s : p.corpus.sentences()) ids.push_back(s.id);
  for (const auto& file : pair_files) {
    auto in = OpenInput(file);
    for (const auto& r : ReadPerturbationRecords(in)) {
      ids.push_back(BeforeId(r.pair_id));
      ids.push_back(AfterId(r.pair_id));
    }
  }
  WriteOutput(output, [&](std::ostream& out) {
    for (int run = 0; run < n_runs; ++run) {
      for (const auto& id : ids) WritePrediction({id, run, majority}, out);
    }
  });
  return 0;
}

// ---- perturb --------------------------------------------------------------

std::vector<PerturbationRecord> ReadRecords(const std::string& path) {
  auto in = OpenInput(path);
  return ReadPerturbationRecords(in);
}

void WriteRecords(const std::string& path,
                  const std::vector<PerturbationRecord>& records) {
  WriteOutput(path, [&](std::ostream& out) {
    WritePerturbationRecords(records, out);
  });
}

int RunPerturbEval(const std::vector<std::string>& pair_files,
                   const std::string& predictions_path, const std::string& model,
                   const std::string& output, bool table, const GlobalOptions& g) {
  auto in = OpenInput(predictions_path);
  const PredictionSet predictions = ParsePredictions(in);
  ordered_json tests = ordered_json::array();
  std::vector<PerturbationEvaluation> evals;
  for (const auto& file : pair_files) {
    const auto pairs = ReadRecords(file);
    evals.push_back(EvaluatePerturbation(pairs, predictions, Seed{g.seed}));
    const auto& e = evals.back();
    ordered_json per_run = ordered_json::array();
    for (std::size_t i = 0; i < e.runs.size(); ++i) {
      const auto& r = e.per_run[i];
      per_run.push_back({{"run", e.runs[i]},
                         {"acc_before", r.acc_before},
                         {"acc_after", r.acc_after},
                         {"delta_abs", r.delta_abs},
                         {"delta_rel", r.delta_rel ? ordered_json(*r.delta_rel)
                                                   : ordered_json(nullptr)}});
    }
    tests.push_back(
        {{"test", PerturbationTestName(e.test)},
         {"pairs", pairs.size()},
         {"runs", per_run},
         {"before", {{"mean", e.before.mean}, {"std", e.before.std}}},
         {"after", {{"mean", e.after.mean}, {"std", e.after.std}}},
         {"delta_abs", e.of_means.delta_abs},
         {"delta_rel", e.of_means.delta_rel ? ordered_json(*e.of_means.delta_rel)
                                            : ordered_json(nullptr)}});
  }
  if (table) {
    WriteOutput(output, [&](std::ostream& out) {
      out << std::left << std::setw(10) << "model";
      for (const auto& e : evals) {
        const std::string t(PerturbationTestName(e.test));
        out << "  " << std::setw(16) << (t + " before") << std::setw(16)
            << "after" << std::setw(16) << "delta";
      }
      out << '\n' << std::setw(10) << model;
      for (const auto& e : evals) {
        const auto& r = e.of_means;
        std::string delta = Signed(r.delta_abs);
        delta += r.delta_rel ? " " + Signed(*r.delta_rel, 1) + "%" : " n/a";
        out << "  " << std::setw(16)
            << (Fixed(e.before.mean) + " (" + Fixed(e.before.std) + ")")
            << std::setw(16)
            << (Fixed(e.after.mean) + " (" + Fixed(e.after.std) + ")")
            << std::setw(16) << delta;
      }
      out << '\n';
    });
  } else {
    WriteJson(output, {{"model", model}, {"tests", tests}});
  }
  return 0;
}

int RunValidate(const std::string& input, bool final) {
  const auto records = ReadRecords(input);
  std::size_t bad = 0;
  for (const auto& r : records) {
    for (const auto& problem : ValidateRecord(r, final)) {
      std::cerr << "error: " << problem << '\n';
      ++bad;
    }
  }
  std::cerr << records.size() << " records, " << bad << " problems\n";
  return bad == 0 ? 0 : 1;
}

// ---- subpop ---------------------------------------------------------------

int RunSubpopCommand(SubpopTest test, const std::string& corpus_path,
                     const std::string& predictions_path,
                     const std::string& embeddings_path, const std::string& split,
                     const std::string& output, const GlobalOptions& g) {
  const Prepared p = Prepare(corpus_path, g);
  const auto test_set = Select(p, split);
  const PunctMode punct = ParsePunctMode(g.punct);
  const Seed seed{g.seed};

  std::vector<std::pair<std::string, double>> values;
  ordered_json extra = ordered_json::object();
  std::size_t eligible = 0, excluded = 0;
  if (test == SubpopTest::kT6) {
    values = ArgRatioValues(test_set, punct);
    eligible = values.size();
  } else {
    if (embeddings_path.empty()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "--embeddings is required for T4 and T5");
    }
    auto in = OpenInput(embeddings_path);
    const EmbeddingTable table = EmbeddingTable::Parse(in);
    const auto train = SelectSplit(p.corpus, p.assignment, Split::kTrain);
    const SimilarityOptions options{ParseOovMode(g.oov), punct, seed};
    const SimilaritySets sets = BuildSimilaritySets(test_set, train, table, options);
    const auto& chosen = test == SubpopTest::kT4 ? sets.same : sets.opposite;
    for (const auto& e : chosen) values.emplace_back(e.sentence_id, e.coefficient);
    eligible = sets.eligible;
    excluded = sets.zero_vector_test;
    extra = {{"t4_size", sets.same.size()},
             {"t5_size", sets.opposite.size()},
             {"zero_vector_train", sets.zero_vector_train},
             {"oov", g.oov}};
  }

  auto pin = OpenInput(predictions_path);
  const PredictionSet predictions = ParsePredictions(pin);
  SubpopReport report = RunSubpop(test, values, p.corpus, predictions, seed);
  report.eligible = eligible;
  report.excluded_zero_vector = excluded;

  ordered_json runs = ordered_json::array();
  for (std::size_t i = 0; i < report.runs.size(); ++i) {
    runs.push_back({{"run", report.runs[i]},
                    {"r_pb", report.r_pb[i] ? ordered_json(*report.r_pb[i])
                                            : ordered_json(nullptr)}});
  }
  ordered_json doc = {{"test", SubpopTestName(test)},
                      {"split", split},
                      {"punct", g.punct},
                      {"eligible", report.eligible},
                      {"excluded_zero_vector", report.excluded_zero_vector},
                      {"set_size", report.set_size},
                      {"runs", runs},
                      {"undefined_runs", report.undefined_runs}};
  if (report.distribution) {
    doc["mean"] = report.distribution->mean;
    doc["std"] = report.distribution->std;
  } else {
    doc["mean"] = nullptr;
    doc["std"] = nullptr;
  }
  for (auto& [k, v] : extra.items()) doc[k] = v;
  WriteJson(output, doc);
  return 0;
}

// ---- repro ----------------------------------------------------------------

int RunRepro(const std::string& input, const std::string& output, bool table) {
  auto in = OpenInput(input);
  const auto report = CompareTable(ReadReproEntries(in));
  WriteOutput(output, [&](std::ostream& out) {
    if (table) {
      WriteReproReportTable(report, out);
    } else {
      WriteReproReportJson(report, out);
    }
  });
  return 0;
}

int Main(int argc, char** argv) {
  CLI::App app{"Argument unit recognition evaluation and robustness tests"};
  app.fallthrough();
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value configuration file");

  GlobalOptions g;
  app.add_option("--seed", g.seed, "seed for tie-breaks and sampling");
  app.add_option("--scheme", g.scheme, "split scheme")
      ->check(CLI::IsMember({"in-domain", "cross-domain"}));
  app.add_option("--labels", g.labels, "label space for F1")
      ->check(CLI::IsMember({"3class", "binary"}));
  app.add_option("--oov", g.oov, "out-of-vocabulary handling")
      ->check(CLI::IsMember({"skip", "zero"}));
  app.add_option("--punct", g.punct,
                 "punctuation-only NON segments in the mixed-segment filter")
      ->check(CLI::IsMember({"ignore", "include"}));
  app.add_option("--threads", g.threads, "worker cap (0 = runtime default)")
      ->check(CLI::NonNegativeNumber);
  app.add_flag("--strict", g.strict, "fail on the first malformed input line");

  std::function<int()> action;

  // ingest
  IngestArgs ingest;
  auto* ingest_cmd = app.add_subcommand("ingest", "validate and canonicalize a corpus");
  ingest_cmd->add_option("--input", ingest.input)->required();
  ingest_cmd->add_option("--format", ingest.format)
      ->check(CLI::IsMember({"jsonl", "tsv"}));
  ingest_cmd->add_option("--output", ingest.output, "canonical JSONL (default stdout)");
  ingest_cmd->add_option("--report", ingest.report, "validation report JSON");
  ingest_cmd->add_option("--tsv-id-column", ingest.mapping.id_column);
  ingest_cmd->add_option("--tsv-topic-column", ingest.mapping.topic_column);
  ingest_cmd->add_option("--tsv-token-column", ingest.mapping.token_column);
  ingest_cmd->add_option("--tsv-label-column", ingest.mapping.label_column);
  ingest_cmd->add_option("--tsv-label-alias", ingest.aliases, "FROM=TO label spelling");
  ingest_cmd->callback([&] { action = [&] { return RunIngest(ingest, g); }; });

  std::string corpus, predictions, output, split = "test", embeddings, input,
                                           model = "model";
  bool table = false;

  auto* stats_cmd = app.add_subcommand("stats", "corpus statistics and split sizes");
  stats_cmd->add_option("--corpus", corpus)->required();
  stats_cmd->add_option("--output", output);
  stats_cmd->callback([&] { action = [&] { return RunStats(corpus, output, g); }; });

  auto* eval_cmd = app.add_subcommand("evaluate", "token, sentence and segment F1");
  eval_cmd->add_option("--corpus", corpus)->required();
  eval_cmd->add_option("--predictions", predictions)->required();
  eval_cmd->add_option("--split", split)
      ->check(CLI::IsMember({"train", "dev", "test", "all"}));
  eval_cmd->add_option("--output", output);
  eval_cmd->add_flag("--table", table);
  eval_cmd->callback([&] {
    action = [&] {
      return RunEvaluate(corpus, predictions, split, output, table, g);
    };
  });

  int n_runs = 1;
  std::vector<std::string> pair_files;
  auto* base_cmd = app.add_subcommand("baseline", "majority-label predictor");
  base_cmd->add_option("--corpus", corpus)->required();
  base_cmd->add_option("--pairs", pair_files, "also predict perturbation pairs");
  base_cmd->add_option("--runs", n_runs)->check(CLI::PositiveNumber);
  base_cmd->add_option("--output", output);
  base_cmd->callback([&] {
    action = [&] { return RunBaseline(corpus, pair_files, n_runs, output, g); };
  });

  auto* perturb_cmd = app.add_subcommand("perturb", "perturbation tests T1-T3");
  perturb_cmd->require_subcommand(1);

  auto* t1c = perturb_cmd->add_subcommand("t1-candidates", "T1 annotation candidates");
  t1c->add_option("--corpus", corpus)->required();
  t1c->add_option("--split", split)->check(CLI::IsMember({"train", "dev", "test", "all"}));
  t1c->add_option("--output", output);
  t1c->callback([&] {
    action = [&] {
      const auto sentences = Select(Prepare(corpus, g), split);
      WriteRecords(output, GenerateT1Candidates(ExtractAdjacentPairs(
                               sentences, OrderFilter::kNonArgFirst)));
      return 0;
    };
  });

  auto* t1a = perturb_cmd->add_subcommand("t1-assemble", "assemble annotated T1 pairs");
  t1a->add_option("--input", input)->required();
  t1a->add_option("--output", output);
  t1a->callback([&] {
    action = [&] {
      const auto assembly = AssembleT1(ReadRecords(input));
      for (const auto& w : assembly.warnings) std::cerr << "warning: " << w << '\n';
      std::cerr << "t1: " << assembly.pairs.size() << " pairs, "
                << assembly.non_ann << " NON_ANN, " << assembly.discarded
                << " discarded, " << assembly.unannotated << " unannotated\n";
      WriteRecords(output, assembly.pairs);
      return 0;
    };
  });

  std::size_t count = 0;
  std::size_t min_arg_tokens = 3;
  auto* t2 = perturb_cmd->add_subcommand("t2", "T2 connector candidates");
  t2->add_option("--corpus", corpus)->required();
  t2->add_option("--split", split)->check(CLI::IsMember({"train", "dev", "test", "all"}));
  t2->add_option("--count-per-topic", count)->required();
  t2->add_option("--min-arg-tokens", min_arg_tokens);
  t2->add_option("--output", output);
  t2->callback([&] {
    action = [&] {
      const auto sentences = Select(Prepare(corpus, g), split);
      WriteRecords(output, GenerateT2(sentences, {count, Seed{g.seed}, min_arg_tokens}));
      return 0;
    };
  });

  double tolerance = 0.1;
  auto* t3 = perturb_cmd->add_subcommand("t3", "T3 context-removal candidates");
  t3->add_option("--corpus", corpus)->required();
  t3->add_option("--split", split)->check(CLI::IsMember({"train", "dev", "test", "all"}));
  t3->add_option("--count", count)->required();
  t3->add_option("--tolerance", tolerance)->check(CLI::Range(0.0, 1.0));
  t3->add_option("--output", output);
  t3->callback([&] {
    action = [&] {
      const auto sentences = Select(Prepare(corpus, g), split);
      WriteRecords(output, GenerateT3(sentences, {count, Seed{g.seed}, tolerance}));
      return 0;
    };
  });

  auto* pe = perturb_cmd->add_subcommand("eval", "accuracy before/after per test");
  pe->add_option("--pairs", pair_files)->required();
  pe->add_option("--predictions", predictions)->required();
  pe->add_option("--model", model);
  pe->add_option("--output", output);
  pe->add_flag("--table", table);
  pe->callback([&] {
    action = [&] {
      return RunPerturbEval(pair_files, predictions, model, output, table, g);
    };
  });

  bool final = false;
  auto* pv = perturb_cmd->add_subcommand("validate", "check a candidate or pair file");
  pv->add_option("--input", input)->required();
  pv->add_flag("--final", final, "require after_tokens and gold_after");
  pv->callback([&] { action = [&] { return RunValidate(input, final); }; });

  auto* subpop_cmd = app.add_subcommand("subpop", "subpopulation tests T4-T6");
  subpop_cmd->require_subcommand(1);
  for (SubpopTest test : {SubpopTest::kT4, SubpopTest::kT5, SubpopTest::kT6}) {
    std::string name(SubpopTestName(test));
    for (auto& c : name) c = static_cast<char>(std::tolower(c));
    auto* cmd = subpop_cmd->add_subcommand(name, "point-biserial correlation");
    cmd->add_option("--corpus", corpus)->required();
    cmd->add_option("--predictions", predictions)->required();
    if (test != SubpopTest::kT6) {
      cmd->add_option("--embeddings", embeddings)->required();
    }
    cmd->add_option("--split", split)->check(CLI::IsMember({"train", "dev", "test", "all"}));
    cmd->add_option("--output", output);
    cmd->callback([&, test] {
      action = [&, test] {
        return RunSubpopCommand(test, corpus, predictions, embeddings, split,
                                output, g);
      };
    });
  }

  auto* repro_cmd = app.add_subcommand("repro", "reproduction gate");
  repro_cmd->add_option("--input", input)->required();
  repro_cmd->add_option("--output", output);
  repro_cmd->add_flag("--table", table);
  repro_cmd->callback([&] { action = [&] { return RunRepro(input, output, table); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  if (g.threads > 0) omp_set_num_threads(g.threads);
  try {
    return action ? action() : 0;
  } catch (const Error& e) {
    std::cerr << "error [" << ErrorCodeName(e.code()) << "]: " << e.what()
              << '\n';
    return 2;
  }
}

}  // namespace
}  // namespace argrobust

int main(int argc, char** argv) { return argrobust::Main(argc, argv); }
