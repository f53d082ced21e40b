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

#include <string>

#include "certkit/certkit.h"
#include "doctest.h"
#include "json.hpp"
#include "test_support.hpp"

using certkit::testing::demo;
using certkit::testing::TempDir;
using nlohmann::json;

namespace {

struct Ctx {
  cert_context* ctx = nullptr;
  Ctx() { REQUIRE(cert_context_create(nullptr, &ctx) == CERT_OK); }
  ~Ctx() { cert_context_destroy(ctx); }
  json report() const { return json::parse(cert_last_report(ctx)); }
};

#define OK(call) REQUIRE_MESSAGE((call) == CERT_OK, cert_last_error())

}  // namespace

TEST_SUITE("capi") {
  TEST_CASE("version and status names") {
    CHECK(std::string(cert_version()).size() > 0);
    CHECK(std::string(cert_status_name(CERT_E_EXTERNAL)) == "external");
  }

  TEST_CASE("null arguments are usage errors") {
    CHECK(cert_context_create(nullptr, nullptr) == CERT_E_USAGE);
    CHECK(std::string(cert_last_error()).find("must not be null") != std::string::npos);
    Ctx c;
    size_t n = 0;
    CHECK(cert_count_hedges(c.ctx, nullptr, &n) == CERT_E_USAGE);
    CHECK(cert_count_hedges(nullptr, "x", &n) == CERT_E_USAGE);
  }

  TEST_CASE("missing files are io errors") {
    Ctx c;
    cert_findings* f = nullptr;
    CHECK(cert_findings_load(c.ctx, "/nonexistent/findings.jsonl", &f) == CERT_E_IO);
    CHECK(f == nullptr);
    cert_options o{};
    o.lexicon_dir = "/nonexistent";
    cert_context* ctx = nullptr;
    CHECK(cert_context_create(&o, &ctx) == CERT_E_IO);
  }

  TEST_CASE("text utilities") {
    Ctx c;
    size_t hedges = 0;
    OK(cert_count_hedges(c.ctx, "It may possibly help.", &hedges));
    CHECK(hedges == 2);
    double fre = 0;
    OK(cert_flesch(c.ctx, "The cat sat on the mat.", &fre));
    CHECK(fre == doctest::Approx(116.145));
    size_t overlap = 0;
    double jac = 0;
    OK(cert_similarity(c.ctx, "Coffee improves memory in adults.",
                       "Drinking coffee improved adult memory.", &overlap, &jac));
    CHECK(overlap == 4);
    CHECK(jac == doctest::Approx(4.0 / 5.0));
    char fp[17];
    cert_fingerprint("abc", 3, fp);
    CHECK(std::string(fp) == "e71fa2190541574b");
  }

  TEST_CASE("token mode ignores multiword hedges") {
    cert_options o{};
    o.hedge_token_mode = 1;
    cert_context* ctx = nullptr;
    OK(cert_context_create(&o, &ctx));
    size_t n = 0;
    OK(cert_count_hedges(ctx, "In most cases it works.", &n));
    CHECK(n == 0);
    cert_context_destroy(ctx);
    Ctx phrase;
    OK(cert_count_hedges(phrase.ctx, "In most cases it works.", &n));
    CHECK(n == 1);
  }

  TEST_CASE("demo pipeline through the C API") {
    Ctx c;
    TempDir dir;
    const std::string corpus_dir = (dir / "corpus").string();
    OK(cert_set_provenance(c.ctx, "capi-test", "0000", 1, 42));
    OK(cert_ingest(c.ctx, demo("news.jsonl").c_str(), demo("papers.jsonl").c_str(),
                   corpus_dir.c_str(), 0));
    CHECK(c.report()["kept_articles"] == 9);

    cert_corpus* corpus = nullptr;
    OK(cert_corpus_load(c.ctx, corpus_dir.c_str(), &corpus));
    CHECK(cert_corpus_num_papers(corpus) == 10);
    CHECK(cert_corpus_num_articles(corpus) == 9);

    cert_findings* findings = nullptr;
    OK(cert_extract(c.ctx, corpus, &findings));
    CHECK(c.report()["news_findings"] == 18);
    const size_t nf = cert_findings_count(findings);
    CHECK(nf == 48);
    cert_finding_view v{};
    OK(cert_findings_get(findings, 0, &v));
    CHECK(std::string(v.source) == "abstract");
    CHECK(v.keyword == nullptr);
    CHECK(cert_findings_get(findings, nf, &v) == CERT_E_USAGE);

    const std::string fpath = (dir / "findings.jsonl").string();
    OK(cert_findings_save(c.ctx, findings, fpath.c_str()));
    const std::string text = certkit::testing::slurp(fpath);
    CHECK(text.rfind("{\"_manifest\":", 0) == 0);
    CHECK(text.find("\"capi-test\"") != std::string::npos);

    cert_findings* sample = nullptr;
    OK(cert_sample(c.ctx, findings, 20, 3, &sample));
    CHECK(cert_findings_count(sample) == 20);
    CHECK(c.report()["strata"].size() == 3);
    cert_findings_free(sample);

    cert_annotations* ann = nullptr;
    OK(cert_annotations_load(c.ctx, demo("annotations.jsonl").c_str(), &ann));
    OK(cert_agreement(c.ctx, ann));
    CHECK(c.report()["sentence_level"]["alpha"].is_number());

    const std::string split = (dir / "split.json").string();
    OK(cert_split(c.ctx, ann, demo("random_ids.txt").c_str(), 1, split.c_str()));

    cert_model* model = nullptr;
    OK(cert_train(c.ctx, findings, ann, split.c_str(), CERT_MODEL_HEDGE, 0, 0, &model));
    CHECK(std::string(cert_model_id(model)) == "lr-hedges");
    const std::string mpath = (dir / "model.json").string();
    OK(cert_model_save(c.ctx, model, mpath.c_str()));
    cert_model* reloaded = nullptr;
    OK(cert_model_load(c.ctx, mpath.c_str(), &reloaded));

    cert_scores* scores = nullptr;
    cert_scores* scores2 = nullptr;
    OK(cert_score(c.ctx, model, findings, &scores));
    OK(cert_score(c.ctx, reloaded, findings, &scores2));
    REQUIRE(cert_scores_count(scores) == nf);
    for (size_t i = 0; i < nf; ++i) {
      cert_score_view a{}, b{};
      OK(cert_scores_get(scores, i, &a));
      OK(cert_scores_get(scores2, i, &b));
      CHECK(a.sentence_certainty == b.sentence_certainty);
      CHECK(a.sentence_certainty >= 1.0);
      CHECK(a.sentence_certainty <= 6.0);
    }
    OK(cert_evaluate(c.ctx, scores, ann, split.c_str()));
    CHECK(c.report()["sentence_level"]["n_full_test"].get<int>() > 0);

    cert_pairs* pairs = nullptr;
    OK(cert_match(c.ctx, corpus, findings, 0, -1, &pairs));
    CHECK(cert_pairs_count(pairs) == 18);
    cert_pair_view pv{};
    OK(cert_pairs_get(pairs, 0, &pv));
    CHECK(pv.overlap >= 3);
    CHECK(pv.jaccard > 0.3);

    const cert_analyze_inputs in{corpus, findings, scores, pairs, ann};
    const std::string out = (dir / "out").string();
    std::filesystem::create_directories(out);
    OK(cert_analyze(c.ctx, "rq1", &in, nullptr, out.c_str()));
    CHECK(c.report()["models"][0]["terms"].contains("source[news]"));
    OK(cert_analyze(c.ctx, "fig2", &in, nullptr, out.c_str()));
    CHECK(c.report()["pearson_r"].get<double>() < 0);
    CHECK(cert_analyze(c.ctx, "rq7", &in, nullptr, out.c_str()) == CERT_E_USAGE);

    const std::string rpath = (dir / "report.json").string();
    OK(cert_write_report(c.ctx, rpath.c_str()));
    CHECK(json::parse(certkit::testing::slurp(rpath)).contains("_manifest"));

    cert_pairs_free(pairs);
    cert_scores_free(scores);
    cert_scores_free(scores2);
    cert_model_free(model);
    cert_model_free(reloaded);
    cert_annotations_free(ann);
    cert_findings_free(findings);
    cert_corpus_free(corpus);
  }

  TEST_CASE("external scoring through the stub and its failures") {
    Ctx c;
    cert_findings* findings = nullptr;
    TempDir dir;
    {
      std::ofstream(dir / "f.jsonl")
          << R"({"finding_id":"a","text":"One finding.","source":"abstract","origin_doi":"d"})" << "\n"
          << R"({"finding_id":"b","text":"Another finding.","source":"abstract","origin_doi":"d"})"
          << "\n";
    }
    OK(cert_findings_load(c.ctx, (dir / "f.jsonl").c_str(), &findings));
    cert_scores* scores = nullptr;
    const std::string good = std::string(CERTKIT_STUB_SCORER) + " --mode reverse --idle-ms 5";
    OK(cert_score_external(c.ctx, good.c_str(), findings, 0, 0, &scores));
    REQUIRE(cert_scores_count(scores) == 2);
    cert_score_view v{};
    OK(cert_scores_get(scores, 1, &v));
    CHECK(std::string(v.finding_id) == "b");
    CHECK(v.sentence_certainty == doctest::Approx(1.0 + 16 % 51 / 10.0));
    cert_scores_free(scores);

    const std::string bad = std::string(CERTKIT_STUB_SCORER) + " --mode bad-id";
    CHECK(cert_score_external(c.ctx, bad.c_str(), findings, 0, 0, &scores) == CERT_E_EXTERNAL);
    CHECK(std::string(cert_last_error_detail()) == "id_mismatch");
    CHECK(cert_score_external(c.ctx, "tcp://127.0.0.1:1", findings, 0, 0, &scores) ==
          CERT_E_EXTERNAL);
    CHECK(std::string(cert_last_error_detail()) == "unreachable");
    const std::string silent = std::string(CERTKIT_STUB_SCORER) + " --mode silent";
    CHECK(cert_score_external(c.ctx, silent.c_str(), findings, 0, 100, &scores) ==
          CERT_E_EXTERNAL);
    CHECK(std::string(cert_last_error_detail()) == "timeout");
    cert_findings_free(findings);
  }
}
