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

#include "certkit/certkit.h"

#include <cmath>
#include <cstring>
#include <memory>
#include <new>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "analysis/descriptive.hpp"
#include "analysis/flesch.hpp"
#include "analysis/report.hpp"
#include "analysis/rq.hpp"
#include "common/error.hpp"
#include "common/hash.hpp"
#include "common/jsonl.hpp"
#include "common/manifest.hpp"
#include "corpus/annotations.hpp"
#include "corpus/io.hpp"
#include "corpus/preprocess.hpp"
#include "evalkit/evaluate.hpp"
#include "evalkit/krippendorff.hpp"
#include "evalkit/sampling.hpp"
#include "evalkit/split.hpp"
#include "extraction/findings.hpp"
#include "lexicon/lexicon.hpp"
#include "matching/match.hpp"
#include "scoring/bow.hpp"
#include "scoring/external.hpp"
#include "scoring/hedge_model.hpp"

using nlohmann::ordered_json;
namespace ck = certkit;

struct cert_context {
  ck::lexicon::Resources resources;
  std::shared_ptr<const ck::lexicon::Lexicon> hedges;
  ck::Manifest manifest;
  std::string report = "{}";
};

struct cert_corpus {
  ck::corpus::Corpus corpus;
};

struct cert_findings {
  std::vector<ck::corpus::ScientificFinding> items;
};

struct cert_annotations {
  std::vector<ck::corpus::AnnotationRecord> records;
};

struct cert_model {
  std::variant<ck::scoring::BowScorer, ck::scoring::HedgeScorer> scorer;
  std::string id;

  const ck::scoring::Scorer& get() const {
    return std::visit([](const auto& s) -> const ck::scoring::Scorer& { return s; }, scorer);
  }
};

struct cert_scores {
  std::vector<ck::scoring::CertaintyScore> items;
};

struct cert_pairs {
  std::vector<ck::matching::MatchedPair> items;
};

namespace {

thread_local std::string g_error;
thread_local std::string g_error_detail;

cert_status status_for(ck::ErrorKind kind) {
  switch (kind) {
    case ck::ErrorKind::kUsage: return CERT_E_USAGE;
    case ck::ErrorKind::kData: return CERT_E_DATA;
    case ck::ErrorKind::kNumeric: return CERT_E_NUMERIC;
    case ck::ErrorKind::kExternal: return CERT_E_EXTERNAL;
    case ck::ErrorKind::kIo: return CERT_E_IO;
  }
  return CERT_E_INTERNAL;
}

template <class F>
cert_status guard(F&& f) {
  g_error.clear();
  g_error_detail.clear();
  try {
    f();
    return CERT_OK;
  } catch (const ck::scoring::ExternalError& e) {
    g_error = e.what();
    g_error_detail = ck::scoring::to_string(e.failure());
    return CERT_E_EXTERNAL;
  } catch (const ck::Error& e) {
    g_error = e.what();
    return status_for(e.kind());
  } catch (const nlohmann::json::exception& e) {
    g_error = e.what();
    return CERT_E_DATA;
  } catch (const std::bad_alloc&) {
    g_error = "out of memory";
    return CERT_E_INTERNAL;
  } catch (const std::exception& e) {
    g_error = e.what();
    return CERT_E_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw ck::usage_error(std::string(what) + " must not be null");
}

ck::Manifest manifest_of(const cert_context* ctx) {
  ck::Manifest m = ctx->manifest;
  m.lexicon_hashes = ctx->resources.hashes();
  return m;
}

std::map<std::string, ck::corpus::GoldLabel> gold_of(const cert_annotations* a,
                                                     ordered_json* report) {
  auto agg = ck::corpus::aggregate_annotations(a->records);
  if (report) {
    (*report)["excluded_bad_text"] = agg.excluded_bad_text.size();
    (*report)["annotation_warnings"] = agg.warnings;
  }
  return std::move(agg.gold);
}

ordered_json ingest_errors_json(const std::vector<ck::corpus::IngestError>& errors) {
  ordered_json out = ordered_json::array();
  for (const auto& e : errors)
    out.push_back({{"file", e.file}, {"line", e.line}, {"message", e.message}});
  return out;
}

ordered_json number_or_null(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

}  // namespace

extern "C" {

const char* cert_version(void) { return CERTKIT_VERSION; }

const char* cert_status_name(cert_status status) {
  switch (status) {
    case CERT_OK: return "ok";
    case CERT_E_INTERNAL: return "internal";
    case CERT_E_USAGE: return "usage";
    case CERT_E_DATA: return "data";
    case CERT_E_EXTERNAL: return "external";
    case CERT_E_NUMERIC: return "numeric";
    case CERT_E_IO: return "io";
  }
  return "unknown";
}

const char* cert_last_error(void) { return g_error.c_str(); }
const char* cert_last_error_detail(void) { return g_error_detail.c_str(); }

cert_status cert_context_create(const cert_options* opts, cert_context** out) {
  return guard([&] {
    require(out, "out");
    *out = nullptr;
    cert_options o{};
    if (opts) o = *opts;
    auto paths = ck::lexicon::ResourcePaths::in_dir(
        o.lexicon_dir ? std::filesystem::path(o.lexicon_dir)
                      : ck::lexicon::ResourcePaths::default_dir());
    if (o.hedge_lexicon) paths.hedges = o.hedge_lexicon;
    if (o.verb_lexicon) paths.report_verbs = o.verb_lexicon;
    if (o.stopwords) paths.stopwords = o.stopwords;
    if (o.abbreviations) paths.abbreviations = o.abbreviations;
    auto mode = o.hedge_token_mode ? ck::lexicon::MatchMode::kToken
                                   : ck::lexicon::MatchMode::kPhrase;
    auto res = ck::lexicon::load_resources(paths, mode);
    auto ctx = std::unique_ptr<cert_context>(new cert_context{std::move(res), nullptr, {}, "{}"});
    ctx->hedges = std::make_shared<const ck::lexicon::Lexicon>(ctx->resources.hedges);
    ctx->manifest.command = "api";
    *out = ctx.release();
  });
}

void cert_context_destroy(cert_context* ctx) { delete ctx; }

cert_status cert_set_provenance(cert_context* ctx, const char* command, const char* config_hash,
                                int has_seed, uint64_t seed) {
  return guard([&] {
    require(ctx, "ctx");
    ctx->manifest.command = command ? command : "";
    ctx->manifest.config_hash = config_hash ? config_hash : "";
    ctx->manifest.seed = has_seed ? std::optional<std::uint64_t>(seed) : std::nullopt;
  });
}

const char* cert_last_report(const cert_context* ctx) { return ctx ? ctx->report.c_str() : "{}"; }

cert_status cert_write_report(cert_context* ctx, const char* path) {
  return guard([&] {
    require(ctx, "ctx");
    require(path, "path");
    ordered_json j;
    j["_manifest"] = manifest_of(ctx).to_json();
    const auto report = ordered_json::parse(ctx->report);
    for (const auto& [k, v] : report.items()) j[k] = v;
    ck::write_text_file(path, j.dump(2) + "\n");
  });
}

void cert_fingerprint(const char* data, size_t size, char out[17]) {
  const auto h = ck::hex64(ck::fnv1a64(std::string_view(data ? data : "", data ? size : 0)));
  std::memcpy(out, h.c_str(), 17);
}

cert_status cert_count_hedges(cert_context* ctx, const char* text, size_t* out) {
  return guard([&] {
    require(ctx, "ctx");
    require(text, "text");
    require(out, "out");
    *out = ck::lexicon::count_hedges(text, *ctx->hedges);
  });
}

cert_status cert_flesch(cert_context* ctx, const char* text, double* out) {
  return guard([&] {
    require(ctx, "ctx");
    require(text, "text");
    require(out, "out");
    *out = ck::analysis::flesch_reading_ease(text, ctx->resources.abbreviations);
  });
}

cert_status cert_similarity(cert_context* ctx, const char* a, const char* b, size_t* overlap,
                            double* jaccard) {
  return guard([&] {
    require(ctx, "ctx");
    require(a, "a");
    require(b, "b");
    const auto& sw = ctx->resources.stopwords;
    auto s = ck::matching::pair_stats(ck::matching::normalize_for_match(a, sw),
                                      ck::matching::normalize_for_match(b, sw));
    if (overlap) *overlap = s.overlap;
    if (jaccard) *jaccard = s.jaccard;
  });
}

cert_status cert_ingest(cert_context* ctx, const char* news_path, const char* papers_path,
                        const char* out_dir, size_t length_cutoff) {
  return guard([&] {
    require(ctx, "ctx");
    require(news_path, "news_path");
    require(papers_path, "papers_path");
    require(out_dir, "out_dir");
    auto ingested = ck::corpus::ingest_corpus(news_path, papers_path);
    auto pre = ck::corpus::preprocess_news(
        ingested.corpus, length_cutoff ? length_cutoff : ck::corpus::kDefaultLengthCutoff);
    ck::corpus::write_corpus(pre.corpus, out_dir, manifest_of(ctx));
    const auto& r = pre.report;
    ordered_json rep;
    rep["papers"] = pre.corpus.papers.size();
    rep["input_articles"] = r.input_articles;
    rep["removed_too_long"] = r.removed_too_long;
    rep["removed_link_count"] = r.removed_link_count;
    rep["quote_paragraphs_stripped"] = r.quote_paragraphs_stripped;
    rep["reference_sections_stripped"] = r.reference_sections_stripped;
    rep["kept_articles"] = r.kept_articles;
    rep["errors"] = ingest_errors_json(ingested.errors);
    ctx->report = rep.dump();
  });
}

cert_status cert_corpus_load(cert_context* ctx, const char* dir, cert_corpus** out) {
  return guard([&] {
    require(ctx, "ctx");
    require(dir, "dir");
    require(out, "out");
    auto loaded = ck::corpus::load_corpus_dir(dir);
    if (!loaded.errors.empty()) {
      const auto& e = loaded.errors.front();
      throw ck::data_error(e.file + ":" + std::to_string(e.line) + ": " + e.message);
    }
    ctx->report = ordered_json{{"papers", loaded.corpus.papers.size()},
                               {"articles", loaded.corpus.articles.size()}}
                      .dump();
    *out = new cert_corpus{std::move(loaded.corpus)};
  });
}

size_t cert_corpus_num_papers(const cert_corpus* c) { return c ? c->corpus.papers.size() : 0; }
size_t cert_corpus_num_articles(const cert_corpus* c) {
  return c ? c->corpus.articles.size() : 0;
}
void cert_corpus_free(cert_corpus* c) { delete c; }

cert_status cert_extract(cert_context* ctx, const cert_corpus* corpus, cert_findings** out) {
  return guard([&] {
    require(ctx, "ctx");
    require(corpus, "corpus");
    require(out, "out");
    auto items = ck::extraction::extract_corpus_findings(
        corpus->corpus, ctx->resources.report_verbs, ctx->resources.abbreviations);
    std::size_t news = 0;
    for (const auto& f : items) news += f.source == ck::corpus::Source::kNews;
    ctx->report = ordered_json{{"abstract_findings", items.size() - news},
                               {"news_findings", news}}
                      .dump();
    *out = new cert_findings{std::move(items)};
  });
}

cert_status cert_findings_load(cert_context* ctx, const char* path, cert_findings** out) {
  return guard([&] {
    require(ctx, "ctx");
    require(path, "path");
    require(out, "out");
    *out = new cert_findings{ck::corpus::read_findings(path)};
  });
}

cert_status cert_findings_save(cert_context* ctx, const cert_findings* f, const char* path) {
  return guard([&] {
    require(ctx, "ctx");
    require(f, "findings");
    require(path, "path");
    ck::corpus::write_findings(path, f->items, manifest_of(ctx));
  });
}

size_t cert_findings_count(const cert_findings* f) { return f ? f->items.size() : 0; }

cert_status cert_findings_get(const cert_findings* f, size_t index, cert_finding_view* out) {
  return guard([&] {
    require(f, "findings");
    require(out, "out");
    if (index >= f->items.size()) throw ck::usage_error("finding index out of range");
    const auto& x = f->items[index];
    out->finding_id = x.finding_id.c_str();
    out->text = x.text.c_str();
    out->source = x.source == ck::corpus::Source::kNews ? "news" : "abstract";
    out->origin_doi = x.origin_doi.c_str();
    out->keyword = x.extraction_keyword ? x.extraction_keyword->c_str() : nullptr;
  });
}

void cert_findings_free(cert_findings* f) { delete f; }

cert_status cert_sample(cert_context* ctx, const cert_findings* f, size_t n, uint64_t seed,
                        cert_findings** out) {
  return guard([&] {
    require(ctx, "ctx");
    require(f, "findings");
    require(out, "out");
    auto s = ck::evalkit::stratified_hedge_sample(f->items, n, *ctx->hedges, seed);
    ordered_json strata;
    for (std::size_t i = 0; i < ck::evalkit::kNumStrata; ++i) {
      strata[ck::evalkit::stratum_name(i)] = {{"sampled", s.stratum_sizes[i]},
                                              {"available", s.available[i]}};
    }
    ctx->report = ordered_json{{"n", s.findings.size()}, {"seed", seed}, {"strata", strata}}
                      .dump();
    *out = new cert_findings{std::move(s.findings)};
  });
}

cert_status cert_annotations_load(cert_context* ctx, const char* path, cert_annotations** out) {
  return guard([&] {
    require(ctx, "ctx");
    require(path, "path");
    require(out, "out");
    auto set = ck::corpus::read_annotations(path);
    ctx->report = ordered_json{{"records", set.records.size()},
                               {"errors", ingest_errors_json(set.errors)}}
                      .dump();
    *out = new cert_annotations{std::move(set.records)};
  });
}

size_t cert_annotations_count(const cert_annotations* a) { return a ? a->records.size() : 0; }
void cert_annotations_free(cert_annotations* a) { delete a; }

cert_status cert_agreement(cert_context* ctx, const cert_annotations* a) {
  return guard([&] {
    require(ctx, "ctx");
    require(a, "annotations");
    auto alpha = [](auto&& compute) -> ordered_json {
      try {
        return {{"alpha", compute()}};
      } catch (const ck::Error& e) {
        return {{"alpha", nullptr}, {"error", e.what()}};
      }
    };
    ordered_json rep;
    rep["records"] = a->records.size();
    rep["sentence_level"] = alpha([&] { return ck::evalkit::sentence_alpha(a->records); });
    ordered_json aspects;
    for (auto aspect : ck::corpus::kAllAspects) {
      aspects[std::string(ck::corpus::to_string(aspect))] =
          alpha([&] { return ck::evalkit::aspect_alpha(a->records, aspect); });
    }
    rep["aspect_level"] = aspects;
    ctx->report = rep.dump();
  });
}

cert_status cert_split(cert_context* ctx, const cert_annotations* a, const char* random_ids_path,
                       uint64_t seed, const char* out_path) {
  return guard([&] {
    require(ctx, "ctx");
    require(a, "annotations");
    require(out_path, "out_path");
    ordered_json rep;
    auto gold = gold_of(a, &rep);
    std::vector<std::string> ids;
    for (const auto& [id, g] : gold) ids.push_back(id);
    std::vector<std::string> random_ids;
    if (random_ids_path) {
      std::istringstream in(ck::read_text_file(random_ids_path));
      std::string line;
      while (std::getline(in, line)) {
        auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos || line[b] == '#') continue;
        auto e = line.find_last_not_of(" \t\r");
        random_ids.push_back(line.substr(b, e - b + 1));
      }
    }
    auto split = ck::evalkit::make_split(std::move(ids), std::move(random_ids), seed);
    ck::evalkit::write_split(out_path, split);
    rep["train"] = split.train.size();
    rep["val"] = split.val.size();
    rep["test"] = split.test.size();
    rep["random_test"] = split.random_test.size();
    ctx->report = rep.dump();
  });
}

cert_status cert_train(cert_context* ctx, const cert_findings* f, const cert_annotations* a,
                       const char* split_path, cert_model_kind kind, double ridge_penalty,
                       size_t vocab_capacity, cert_model** out) {
  return guard([&] {
    require(ctx, "ctx");
    require(f, "findings");
    require(a, "annotations");
    require(split_path, "split_path");
    require(out, "out");
    ordered_json rep;
    auto gold = gold_of(a, &rep);
    auto split = ck::evalkit::read_split(split_path);
    std::map<std::string, const ck::corpus::ScientificFinding*> by_id;
    for (const auto& x : f->items) by_id[x.finding_id] = &x;

    std::size_t missing = 0;
    if (kind == CERT_MODEL_HEDGE) {
      std::vector<std::pair<double, double>> pts;
      for (const auto& id : split.train) {
        auto fi = by_id.find(id);
        auto gi = gold.find(id);
        if (fi == by_id.end() || gi == gold.end() || !gi->second.sentence) {
          ++missing;
          continue;
        }
        pts.emplace_back(
            static_cast<double>(ck::lexicon::count_hedges(fi->second->text, *ctx->hedges)),
            *gi->second.sentence);
      }
      if (pts.empty()) throw ck::data_error("train: no training items with sentence labels");
      ck::scoring::HedgeScorer scorer(ck::scoring::fit_hedge_model(pts), ctx->hedges);
      rep["model"] = "lr-hedges";
      rep["train_items"] = pts.size();
      rep["intercept"] = scorer.fit().intercept;
      rep["slope"] = scorer.fit().slope;
      rep["skipped_train_ids"] = missing;
      ctx->report = rep.dump();
      *out = new cert_model{std::move(scorer), "lr-hedges"};
      return;
    }
    if (kind != CERT_MODEL_BOW) throw ck::usage_error("unknown model kind");
    std::vector<ck::scoring::BowExample> examples;
    for (const auto& id : split.train) {
      auto fi = by_id.find(id);
      auto gi = gold.find(id);
      if (fi == by_id.end() || gi == gold.end()) {
        ++missing;
        continue;
      }
      examples.push_back({fi->second->text, gi->second.sentence, gi->second.aspects, 1.0});
    }
    if (examples.empty()) throw ck::data_error("train: no labelled training items");
    auto model = ck::scoring::fit_bow(
        examples, ridge_penalty > 0 ? ridge_penalty : ck::scoring::kDefaultRidgePenalty,
        vocab_capacity ? vocab_capacity : ck::scoring::kDefaultVocabCapacity);
    rep["model"] = "lr-bow";
    rep["train_items"] = examples.size();
    rep["vocabulary"] = model.vocabulary.size();
    rep["aspect_heads"] = !model.aspect_heads.empty();
    rep["skipped_train_ids"] = missing;
    ctx->report = rep.dump();
    *out = new cert_model{ck::scoring::BowScorer(std::move(model)), "lr-bow"};
  });
}

cert_status cert_model_save(cert_context* ctx, const cert_model* m, const char* path) {
  return guard([&] {
    require(ctx, "ctx");
    require(m, "model");
    require(path, "path");
    ordered_json j;
    j["_manifest"] = manifest_of(ctx).to_json();
    auto body = std::visit([](const auto& s) { return s.to_json(); }, m->scorer);
    for (auto& [k, v] : body.items()) j[k] = v;
    ck::write_text_file(path, j.dump() + "\n");
  });
}

cert_status cert_model_load(cert_context* ctx, const char* path, cert_model** out) {
  return guard([&] {
    require(ctx, "ctx");
    require(path, "path");
    require(out, "out");
    auto j = nlohmann::json::parse(ck::read_text_file(path));
    const std::string format = j.value("format", "");
    ordered_json rep;
    if (format == "certkit-bow/1") {
      rep["model"] = "lr-bow";
      ctx->report = rep.dump();
      *out = new cert_model{ck::scoring::BowScorer::from_json(j), "lr-bow"};
    } else if (format == "certkit-hedge/1") {
      rep["model"] = "lr-hedges";
      if (j.value("hedge_lexicon_hash", "") != ctx->hedges->content_hash())
        rep["warnings"] = {"hedge lexicon differs from the one the model was trained with"};
      ctx->report = rep.dump();
      *out = new cert_model{ck::scoring::HedgeScorer::from_json(j, ctx->hedges), "lr-hedges"};
    } else {
      throw ck::data_error(std::string(path) + ": unknown model format '" + format + "'");
    }
  });
}

const char* cert_model_id(const cert_model* m) { return m ? m->id.c_str() : ""; }
void cert_model_free(cert_model* m) { delete m; }

cert_status cert_score(cert_context* ctx, const cert_model* m, const cert_findings* f,
                       cert_scores** out) {
  return guard([&] {
    require(ctx, "ctx");
    require(m, "model");
    require(f, "findings");
    require(out, "out");
    auto scores = ck::scoring::score_all(m->get(), f->items);
    ctx->report = ordered_json{{"scorer", m->id}, {"scored", scores.size()}}.dump();
    *out = new cert_scores{std::move(scores)};
  });
}

cert_status cert_score_external(cert_context* ctx, const char* endpoint, const cert_findings* f,
                                size_t max_in_flight, uint32_t timeout_ms, cert_scores** out) {
  return guard([&] {
    require(ctx, "ctx");
    require(endpoint, "endpoint");
    require(f, "findings");
    require(out, "out");
    ck::scoring::ExternalOptions opts;
    if (max_in_flight) opts.max_in_flight = max_in_flight;
    if (timeout_ms) opts.timeout = std::chrono::milliseconds(timeout_ms);
    opts.endpoint_label = endpoint;
    auto channel = ck::scoring::open_endpoint(endpoint);
    auto res = ck::scoring::score_external(f->items, *channel, opts);
    ctx->report = ordered_json{{"scorer", "external"},
                               {"scored", res.scores.size()},
                               {"warnings", res.warnings}}
                      .dump();
    *out = new cert_scores{std::move(res.scores)};
  });
}

cert_status cert_scores_load(cert_context* ctx, const char* path, cert_scores** out) {
  return guard([&] {
    require(ctx, "ctx");
    require(path, "path");
    require(out, "out");
    *out = new cert_scores{ck::scoring::read_scores(path)};
  });
}

cert_status cert_scores_save(cert_context* ctx, const cert_scores* s, const char* path) {
  return guard([&] {
    require(ctx, "ctx");
    require(s, "scores");
    require(path, "path");
    ck::scoring::write_scores(path, s->items, manifest_of(ctx));
  });
}

size_t cert_scores_count(const cert_scores* s) { return s ? s->items.size() : 0; }

cert_status cert_scores_get(const cert_scores* s, size_t index, cert_score_view* out) {
  return guard([&] {
    require(s, "scores");
    require(out, "out");
    if (index >= s->items.size()) throw ck::usage_error("score index out of range");
    const auto& x = s->items[index];
    out->finding_id = x.finding_id.c_str();
    out->sentence_certainty = x.sentence_certainty;
    for (std::size_t a = 0; a < ck::corpus::kNumAspects; ++a)
      out->aspects[a] = static_cast<int>(x.aspects[a]);
    out->scorer_id = x.scorer_id.c_str();
  });
}

void cert_scores_free(cert_scores* s) { delete s; }

cert_status cert_evaluate(cert_context* ctx, const cert_scores* s, const cert_annotations* a,
                          const char* split_path) {
  return guard([&] {
    require(ctx, "ctx");
    require(s, "scores");
    require(a, "annotations");
    require(split_path, "split_path");
    ordered_json rep;
    auto gold = gold_of(a, &rep);
    auto split = ck::evalkit::read_split(split_path);
    std::map<std::string, double> sentence;
    std::map<std::string, ck::corpus::AspectLabels> aspects;
    std::set<std::string> scorers;
    for (const auto& x : s->items) {
      sentence[x.finding_id] = x.sentence_certainty;
      aspects[x.finding_id] = x.aspects;
      scorers.insert(x.scorer_id);
    }
    rep["scorers"] = scorers;
    auto se = ck::evalkit::evaluate_sentence(sentence, gold, split);
    rep["sentence_level"] = {{"r_full_test", se.r_full_test},
                             {"n_full_test", se.n_full},
                             {"r_random_set", number_or_null(se.r_random_set)},
                             {"n_random_set", se.n_random}};
    auto ae = ck::evalkit::evaluate_aspects(aspects, gold, split.evaluation_ids());
    ordered_json cells = ordered_json::array();
    for (const auto& c : ae.cells) {
      cells.push_back({{"aspect", ck::corpus::to_string(c.aspect)},
                       {"label", ck::corpus::to_string(c.label)},
                       {"f1", c.f1},
                       {"support", c.support}});
    }
    rep["aspect_level"] = {{"n", ae.n}, {"mean_binary_f1", ae.mean_f1}, {"cells", cells}};
    ctx->report = rep.dump();
  });
}

cert_status cert_match(cert_context* ctx, const cert_corpus* c, const cert_findings* f,
                       size_t min_overlap, double min_jaccard, cert_pairs** out) {
  return guard([&] {
    require(ctx, "ctx");
    require(c, "corpus");
    require(f, "findings");
    require(out, "out");
    ck::matching::MatchThresholds t;
    if (min_overlap) t.min_overlap = min_overlap;
    if (min_jaccard >= 0) t.min_jaccard = min_jaccard;
    auto pairs = ck::matching::match_corpus(c->corpus, f->items, ctx->resources.stopwords, t);
    ctx->report = ordered_json{{"pairs", pairs.size()},
                               {"min_overlap", t.min_overlap},
                               {"min_jaccard", t.min_jaccard}}
                      .dump();
    *out = new cert_pairs{std::move(pairs)};
  });
}

cert_status cert_pairs_load(cert_context* ctx, const char* path, cert_pairs** out) {
  return guard([&] {
    require(ctx, "ctx");
    require(path, "path");
    require(out, "out");
    *out = new cert_pairs{ck::matching::read_pairs(path)};
  });
}

cert_status cert_pairs_save(cert_context* ctx, const cert_pairs* p, const char* path) {
  return guard([&] {
    require(ctx, "ctx");
    require(p, "pairs");
    require(path, "path");
    ck::matching::write_pairs(path, p->items, manifest_of(ctx));
  });
}

size_t cert_pairs_count(const cert_pairs* p) { return p ? p->items.size() : 0; }

cert_status cert_pairs_get(const cert_pairs* p, size_t index, cert_pair_view* out) {
  return guard([&] {
    require(p, "pairs");
    require(out, "out");
    if (index >= p->items.size()) throw ck::usage_error("pair index out of range");
    const auto& x = p->items[index];
    out->news_finding_id = x.news_finding_id.c_str();
    out->abstract_finding_id = x.abstract_finding_id.c_str();
    out->overlap = x.overlap;
    out->jaccard = x.jaccard;
  });
}

void cert_pairs_free(cert_pairs* p) { delete p; }

cert_status cert_analyze(cert_context* ctx, const char* spec, const cert_analyze_inputs* in,
                         const cert_analyze_options* opts, const char* out_dir) {
  return guard([&] {
    require(ctx, "ctx");
    require(spec, "spec");
    require(in, "inputs");
    require(out_dir, "out_dir");
    cert_analyze_options o{0, 0, 0};
    if (opts) o = *opts;
    const std::string name = spec;
    const auto manifest = manifest_of(ctx);
    ordered_json rep;
    rep["spec"] = name;
    std::vector<std::filesystem::path> files;

    if (name == "fig2") {
      if (!in->findings || !in->annotations)
        throw ck::usage_error("fig2 needs findings and annotations");
      auto gold = gold_of(in->annotations, nullptr);
      auto curve = ck::analysis::hedge_certainty_curve(in->findings->items, gold, *ctx->hedges);
      files = ck::analysis::write_hedge_curve(out_dir, curve, manifest, o.write_svg);
      rep["pearson_r"] = curve.r;
      rep["n"] = curve.n;
    } else if (name == "fig3") {
      if (!in->annotations) throw ck::usage_error("fig3 needs annotations");
      auto gold = gold_of(in->annotations, nullptr);
      auto assoc = ck::analysis::aspect_sentence_association(gold);
      files = ck::analysis::write_association(out_dir, assoc, manifest, o.write_svg);
      rep["n"] = assoc.n;
      rep["corpus_mean"] = assoc.corpus_mean;
      std::size_t omitted = 0;
      for (const auto& c : assoc.cells) omitted += c.omitted;
      rep["omitted_cells"] = omitted;
    } else {
      if (!in->corpus || !in->findings || !in->scores)
        throw ck::usage_error(name + " needs corpus, findings and scores");
      const bool needs_pairs = name == "rq1" || name == "rq2" || name == "rq3";
      if (needs_pairs && !in->pairs) throw ck::usage_error(name + " needs matched pairs");
      ck::analysis::RqData data;
      data.corpus = &in->corpus->corpus;
      data.findings = in->findings->items;
      data.scores = in->scores->items;
      if (in->pairs) data.pairs = in->pairs->items;
      data.abbreviations = ctx->resources.abbreviations;
      ck::analysis::RqOptions ro;
      ro.se_kind = o.robust_se ? ck::analysis::SeKind::kHC1 : ck::analysis::SeKind::kClassical;
      if (o.bins) ro.bins = o.bins;
      auto results = ck::analysis::run_rq(name, data, ro);
      ordered_json models = ordered_json::array();
      for (const auto& r : results) {
        auto written = ck::analysis::write_regression(out_dir, r, manifest, o.write_svg);
        files.insert(files.end(), written.begin(), written.end());
        ordered_json terms = ordered_json::object();
        for (const auto& t : r.terms) {
          if (t.name == "(Intercept)") continue;
          terms[t.name] = {{"coef", t.coef}, {"se", t.se}, {"p", number_or_null(t.p)}};
        }
        models.push_back({{"name", r.name},
                          {"n_obs", r.n_obs},
                          {"r_squared", number_or_null(r.r_squared)},
                          {"terms", terms},
                          {"notes", r.notes}});
      }
      rep["models"] = models;
    }
    ordered_json fl = ordered_json::array();
    for (const auto& p : files) fl.push_back(p.string());
    rep["files"] = fl;
    ctx->report = rep.dump();
  });
}

}  // extern "C"
