// Copyright 2026 The certkit Authors.
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

// Command-line front end. Talks to the library only through the C API.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "certkit/certkit.h"
#include "json.hpp"

namespace {

enum ExitCode { kOk = 0, kInternal = 1, kUsage = 2, kData = 3, kExternal = 4 };

int exit_code_for(cert_status s) {
  switch (s) {
    case CERT_OK: return kOk;
    case CERT_E_USAGE: return kUsage;
    case CERT_E_DATA:
    case CERT_E_NUMERIC:
    case CERT_E_IO: return kData;
    case CERT_E_EXTERNAL: return kExternal;
    case CERT_E_INTERNAL: return kInternal;
  }
  return kInternal;
}

void print_error(const std::string& kind, const std::string& message,
                 const std::string& detail = {}) {
  nlohmann::ordered_json j;
  j["error"]["kind"] = kind;
  j["error"]["message"] = message;
  if (!detail.empty()) j["error"]["detail"] = detail;
  std::cerr << j.dump() << std::endl;
}

// Thrown on a failed C API call; carries the status.
struct ApiFailure {
  cert_status status;
};

void check(cert_status s) {
  if (s != CERT_OK) throw ApiFailure{s};
}

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using Context = std::unique_ptr<cert_context, Deleter<cert_context, cert_context_destroy>>;
using Corpus = std::unique_ptr<cert_corpus, Deleter<cert_corpus, cert_corpus_free>>;
using Findings = std::unique_ptr<cert_findings, Deleter<cert_findings, cert_findings_free>>;
using Annotations =
    std::unique_ptr<cert_annotations, Deleter<cert_annotations, cert_annotations_free>>;
using Model = std::unique_ptr<cert_model, Deleter<cert_model, cert_model_free>>;
using Scores = std::unique_ptr<cert_scores, Deleter<cert_scores, cert_scores_free>>;
using Pairs = std::unique_ptr<cert_pairs, Deleter<cert_pairs, cert_pairs_free>>;

template <class Handle, class Load>
Handle load(Load fn, cert_context* ctx, const std::string& path) {
  typename Handle::pointer raw = nullptr;
  check(fn(ctx, path.c_str(), &raw));
  return Handle(raw);
}

const char* opt_cstr(const std::string& s) { return s.empty() ? nullptr : s.c_str(); }

struct Globals {
  std::string lexicon_dir;
  std::string hedge_lexicon;
  std::string verb_lexicon;
  std::string stopwords;
  std::string abbreviations;
  std::string hedge_mode = "phrase";
  std::uint64_t seed = 0;
};

struct Args {
  std::string news, papers, out, corpus, findings, annotations, split, model, external, scores,
      pairs, random_ids, strategy = "hedge-stratified", kind = "bow", spec;
  std::size_t length_cutoff = 0;
  std::size_t n = 0;
  double ridge_penalty = 0.0;
  std::size_t vocab_size = 0;
  std::size_t max_in_flight = 0;
  std::uint32_t timeout_ms = 0;
  std::size_t min_overlap = 3;
  double min_jaccard = 0.3;
  bool robust_se = false;
  std::size_t bins = 4;
  bool svg = false;
};

void print_report(cert_context* ctx) { std::cout << cert_last_report(ctx) << std::endl; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"certkit: certainty analysis of scientific findings"};
  app.set_config("--config", "", "TOML config file mirroring the command-line flags");
  app.set_version_flag("--version", std::string(cert_version()));
  app.require_subcommand(1);

  Globals g;
  Args a;
  app.add_option("--lexicon-dir", g.lexicon_dir, "Directory with the lexicon files");
  app.add_option("--hedge-lexicon", g.hedge_lexicon, "Hedge lexicon file");
  app.add_option("--verb-lexicon", g.verb_lexicon, "Report-verb lexicon file");
  app.add_option("--stopwords", g.stopwords, "Stopword list used by matching");
  app.add_option("--abbreviations", g.abbreviations, "Sentence-splitter abbreviation list");
  app.add_option("--hedge-mode", g.hedge_mode, "Hedge counting: phrase or token")
      ->check(CLI::IsMember({"phrase", "token"}));
  app.add_option("--seed", g.seed, "Seed for every random choice");

  auto* ingest = app.add_subcommand("ingest", "Read, validate and preprocess a corpus");
  ingest->add_option("--news", a.news, "news.jsonl")->required();
  ingest->add_option("--papers", a.papers, "papers.jsonl")->required();
  ingest->add_option("--out", a.out, "Output corpus directory")->required();
  ingest->add_option("--length-cutoff", a.length_cutoff, "Drop longer articles (words)");

  auto* extract = app.add_subcommand("extract", "Extract abstract and news findings");
  extract->add_option("--corpus", a.corpus, "Corpus directory")->required();
  extract->add_option("--out", a.out, "findings.jsonl")->required();

  auto* sample = app.add_subcommand("sample", "Draw an annotation sample");
  sample->add_option("--findings", a.findings, "findings.jsonl")->required();
  sample->add_option("--n", a.n, "Sample size")->required();
  sample->add_option("--strategy", a.strategy, "Sampling strategy")
      ->check(CLI::IsMember({"hedge-stratified"}));
  sample->add_option("--seed", g.seed, "Seed for every random choice");
  sample->add_option("--out", a.out, "Output findings.jsonl")->required();

  auto* split = app.add_subcommand("split", "Make a train/val/test split of annotated items");
  split->add_option("--annotations", a.annotations, "annotations.jsonl")->required();
  split->add_option("--random-ids", a.random_ids, "Ids of the random test set, one per line");
  split->add_option("--seed", g.seed, "Seed for every random choice");
  split->add_option("--out", a.out, "split.json")->required();

  auto* train = app.add_subcommand("train", "Fit a baseline scorer");
  train->add_option("--findings", a.findings, "findings.jsonl")->required();
  train->add_option("--annotations", a.annotations, "annotations.jsonl")->required();
  train->add_option("--model", a.kind, "bow or hedge")
      ->check(CLI::IsMember({"bow", "hedge"}));
  train->add_option("--split", a.split, "split.json")->required();
  train->add_option("--ridge-penalty", a.ridge_penalty, "Ridge penalty (bow)");
  train->add_option("--vocab-size", a.vocab_size, "Vocabulary capacity (bow)");
  train->add_option("--out", a.out, "Model file")->required();

  auto* score = app.add_subcommand("score", "Score findings with a model or external scorer");
  score->add_option("--findings", a.findings, "findings.jsonl")->required();
  auto* model_opt = score->add_option("--model", a.model, "Model file");
  auto* ext_opt = score->add_option("--external", a.external, "tcp://host:port or a command");
  model_opt->excludes(ext_opt);
  score->add_option("--max-in-flight", a.max_in_flight, "Concurrent external requests");
  score->add_option("--timeout-ms", a.timeout_ms, "Per-request external timeout");
  score->add_option("--out", a.out, "scores.jsonl")->required();

  auto* eval = app.add_subcommand("eval", "Evaluate scores against gold labels");
  eval->add_option("--scores", a.scores, "scores.jsonl")->required();
  eval->add_option("--annotations", a.annotations, "annotations.jsonl")->required();
  eval->add_option("--split", a.split, "split.json")->required();
  eval->add_option("--out", a.out, "Also write the report here");

  auto* agreement = app.add_subcommand("agreement", "Inter-annotator agreement");
  agreement->add_option("--annotations", a.annotations, "annotations.jsonl")->required();
  agreement->add_option("--out", a.out, "Also write the report here");

  auto* match = app.add_subcommand("match", "Pair news findings with abstract findings");
  match->add_option("--corpus", a.corpus, "Corpus directory")->required();
  match->add_option("--findings", a.findings, "findings.jsonl")->required();
  match->add_option("--min-overlap", a.min_overlap, "Minimum stem overlap");
  match->add_option("--min-jaccard", a.min_jaccard, "Jaccard must exceed this");
  match->add_option("--out", a.out, "pairs.jsonl")->required();

  auto* analyze = app.add_subcommand("analyze", "Regressions and descriptive analyses");
  analyze->add_option("--rq", a.spec, "rq1..rq5, fig2 or fig3")
      ->required()
      ->check(CLI::IsMember({"rq1", "rq2", "rq3", "rq4", "rq5", "fig2", "fig3"}));
  analyze->add_option("--corpus", a.corpus, "Corpus directory");
  analyze->add_option("--findings", a.findings, "findings.jsonl");
  analyze->add_option("--scores", a.scores, "scores.jsonl");
  analyze->add_option("--pairs", a.pairs, "pairs.jsonl");
  analyze->add_option("--annotations", a.annotations, "annotations.jsonl");
  analyze->add_flag("--robust-se", a.robust_se, "HC1 standard errors");
  analyze->add_option("--bins", a.bins, "Quantile buckets for binned variants");
  analyze->add_flag("--svg", a.svg, "Also write SVG charts");
  analyze->add_option("--out", a.out, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    print_error("usage", e.what());
    return kUsage;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();
  try {
    cert_options opts{};
    opts.lexicon_dir = opt_cstr(g.lexicon_dir);
    opts.hedge_lexicon = opt_cstr(g.hedge_lexicon);
    opts.verb_lexicon = opt_cstr(g.verb_lexicon);
    opts.stopwords = opt_cstr(g.stopwords);
    opts.abbreviations = opt_cstr(g.abbreviations);
    opts.hedge_token_mode = g.hedge_mode == "token";
    cert_context* raw_ctx = nullptr;
    check(cert_context_create(&opts, &raw_ctx));
    Context ctx(raw_ctx);
    cert_context* c = ctx.get();

    // The effective configuration, defaults included, identifies the run.
    const std::string config = app.config_to_str(true, false);
    char hash[17];
    cert_fingerprint(config.data(), config.size(), hash);
    check(cert_set_provenance(c, command.c_str(), hash, 1, g.seed));

    if (command == "ingest") {
      check(cert_ingest(c, a.news.c_str(), a.papers.c_str(), a.out.c_str(), a.length_cutoff));
      print_report(c);
    } else if (command == "extract") {
      auto corpus = load<Corpus>(cert_corpus_load, c, a.corpus);
      cert_findings* f = nullptr;
      check(cert_extract(c, corpus.get(), &f));
      Findings findings(f);
      std::string report = cert_last_report(c);
      check(cert_findings_save(c, findings.get(), a.out.c_str()));
      std::cout << report << std::endl;
    } else if (command == "sample") {
      auto findings = load<Findings>(cert_findings_load, c, a.findings);
      cert_findings* s = nullptr;
      check(cert_sample(c, findings.get(), a.n, g.seed, &s));
      Findings sampled(s);
      std::string report = cert_last_report(c);
      check(cert_findings_save(c, sampled.get(), a.out.c_str()));
      std::cout << report << std::endl;
    } else if (command == "split") {
      auto ann = load<Annotations>(cert_annotations_load, c, a.annotations);
      check(cert_split(c, ann.get(), opt_cstr(a.random_ids), g.seed, a.out.c_str()));
      print_report(c);
    } else if (command == "train") {
      auto findings = load<Findings>(cert_findings_load, c, a.findings);
      auto ann = load<Annotations>(cert_annotations_load, c, a.annotations);
      cert_model* m = nullptr;
      check(cert_train(c, findings.get(), ann.get(), a.split.c_str(),
                       a.kind == "hedge" ? CERT_MODEL_HEDGE : CERT_MODEL_BOW, a.ridge_penalty,
                       a.vocab_size, &m));
      Model model(m);
      std::string report = cert_last_report(c);
      check(cert_model_save(c, model.get(), a.out.c_str()));
      std::cout << report << std::endl;
    } else if (command == "score") {
      if (a.model.empty() == a.external.empty()) {
        print_error("usage", "score needs exactly one of --model and --external");
        return kUsage;
      }
      auto findings = load<Findings>(cert_findings_load, c, a.findings);
      cert_scores* s = nullptr;
      if (!a.model.empty()) {
        auto model = load<Model>(cert_model_load, c, a.model);
        check(cert_score(c, model.get(), findings.get(), &s));
      } else {
        check(cert_score_external(c, a.external.c_str(), findings.get(), a.max_in_flight,
                                  a.timeout_ms, &s));
      }
      Scores scores(s);
      std::string report = cert_last_report(c);
      check(cert_scores_save(c, scores.get(), a.out.c_str()));
      std::cout << report << std::endl;
    } else if (command == "eval") {
      auto scores = load<Scores>(cert_scores_load, c, a.scores);
      auto ann = load<Annotations>(cert_annotations_load, c, a.annotations);
      check(cert_evaluate(c, scores.get(), ann.get(), a.split.c_str()));
      if (!a.out.empty()) check(cert_write_report(c, a.out.c_str()));
      print_report(c);
    } else if (command == "agreement") {
      auto ann = load<Annotations>(cert_annotations_load, c, a.annotations);
      check(cert_agreement(c, ann.get()));
      if (!a.out.empty()) check(cert_write_report(c, a.out.c_str()));
      print_report(c);
    } else if (command == "match") {
      auto corpus = load<Corpus>(cert_corpus_load, c, a.corpus);
      auto findings = load<Findings>(cert_findings_load, c, a.findings);
      cert_pairs* p = nullptr;
      check(cert_match(c, corpus.get(), findings.get(), a.min_overlap, a.min_jaccard, &p));
      Pairs pairs(p);
      std::string report = cert_last_report(c);
      check(cert_pairs_save(c, pairs.get(), a.out.c_str()));
      std::cout << report << std::endl;
    } else if (command == "analyze") {
      Corpus corpus;
      Findings findings;
      Scores scores;
      Pairs pairs;
      Annotations ann;
      if (!a.corpus.empty()) corpus = load<Corpus>(cert_corpus_load, c, a.corpus);
      if (!a.findings.empty()) findings = load<Findings>(cert_findings_load, c, a.findings);
      if (!a.scores.empty()) scores = load<Scores>(cert_scores_load, c, a.scores);
      if (!a.pairs.empty()) pairs = load<Pairs>(cert_pairs_load, c, a.pairs);
      if (!a.annotations.empty())
        ann = load<Annotations>(cert_annotations_load, c, a.annotations);
      cert_analyze_inputs in{corpus.get(), findings.get(), scores.get(), pairs.get(), ann.get()};
      cert_analyze_options o{a.robust_se ? 1 : 0, a.bins, a.svg ? 1 : 0};
      check(cert_analyze(c, a.spec.c_str(), &in, &o, a.out.c_str()));
      print_report(c);
    }
    return kOk;
  } catch (const ApiFailure& f) {
    print_error(cert_status_name(f.status), cert_last_error(), cert_last_error_detail());
    return exit_code_for(f.status);
  } catch (const std::exception& e) {
    print_error("internal", e.what());
    return kInternal;
  }
}
