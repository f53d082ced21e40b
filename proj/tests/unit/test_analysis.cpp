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

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "analysis/descriptive.hpp"
#include "analysis/design.hpp"
#include "analysis/flesch.hpp"
#include "analysis/margins.hpp"
#include "analysis/ols.hpp"
#include "analysis/report.hpp"
#include "analysis/rq.hpp"
#include "common/error.hpp"
#include "common/manifest.hpp"
#include "common/rng.hpp"
#include "corpus/types.hpp"
#include "doctest.h"
#include "lexicon/lexicon.hpp"
#include "matching/match.hpp"
#include "scoring/scorer.hpp"
#include "test_support.hpp"

using namespace certkit;
using namespace certkit::analysis;
using corpus::AspectLabel;

namespace {

const std::vector<std::string>& abbreviations() {
  static const auto r =
      lexicon::load_resources(lexicon::ResourcePaths::in_dir(CERTKIT_DEFAULT_LEXICON_DIR));
  return r.abbreviations;
}

bool has_note(const RegressionResult& r, const std::string& needle) {
  for (const auto& n : r.notes)
    if (n.find(needle) != std::string::npos) return true;
  return false;
}

// Random frame: y = 1 + 2 x1 - 0.5 x2 + g effect + noise.
Frame random_frame(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<double> y(n), x1(n), x2(n);
  std::vector<std::string> g(n);
  const char* levels[] = {"lo", "mid", "hi"};
  const double effect[] = {0.0, 0.7, -0.4};
  for (std::size_t i = 0; i < n; ++i) {
    x1[i] = rng.normal();
    x2[i] = rng.uniform() * 10;
    const auto l = rng.below(3);
    g[i] = levels[l];
    y[i] = 1 + 2 * x1[i] - 0.5 * x2[i] + effect[l] + rng.normal() * (1 + 0.3 * x2[i]);
  }
  Frame f(n);
  f.add_numeric("y", y);
  f.add_numeric("x1", x1);
  f.add_numeric("x2", x2);
  f.add_categorical("g", g);
  return f;
}

RegressionResult fit_frame(const Frame& f, const std::vector<std::string>& vars, SeKind se) {
  return ols_fit(build_design(f, vars), Eigen::Map<const Eigen::VectorXd>(
                                            f.numeric("y").data(), static_cast<long>(f.rows())),
                 se);
}

// Synthetic matched corpus: one article per paper, two pairs per article.
struct RqWorld {
  corpus::Corpus corpus;
  std::vector<corpus::ScientificFinding> findings;
  std::vector<scoring::CertaintyScore> scores;
  std::vector<matching::MatchedPair> pairs;

  RqData data() const {
    RqData d;
    d.corpus = &corpus;
    d.findings = findings;
    d.scores = scores;
    d.pairs = pairs;
    d.abbreviations = abbreviations();
    return d;
  }
};

std::string random_text(Rng& rng) {
  static const char* words[] = {"the",     "results", "show",   "a",        "strong",
                                "effect",  "of",      "sleep",  "on",       "memory",
                                "in",      "older",   "adults", "significantly", "reduced",
                                "anxiety", "levels",  "across", "populations", "treatment"};
  std::string t = "Patients";
  const auto len = 5 + rng.below(20);
  for (std::size_t i = 0; i < len; ++i) {
    t += ' ';
    t += words[rng.below(20)];
  }
  return t + ".";
}

RqWorld make_world(std::size_t papers, double news_shift, std::uint64_t seed, double noise = 1.0) {
  Rng rng(seed);
  RqWorld w;
  const char* fields[] = {"medicine", "biology", "physics"};
  const char* outlets[] = {"gazette", "tribune", "herald", "courier"};
  for (std::size_t p = 0; p < papers; ++p) {
    corpus::PaperMeta paper;
    paper.doi = "10.9/" + std::to_string(p);
    paper.journal_impact_factor = 1 + rng.uniform() * 20;
    paper.num_authors = 1 + static_cast<int>(rng.below(12));
    paper.field = fields[rng.below(3)];
    paper.author_rank = rng.uniform() * 100;
    paper.affiliation_rank = rng.uniform() * 200;
    w.corpus.papers.push_back(paper);
    corpus::NewsArticle art;
    art.article_id = "n" + std::to_string(p);
    art.outlet = outlets[rng.below(4)];
    art.linked_dois = {paper.doi};
    w.corpus.articles.push_back(art);
    for (int k = 0; k < 2; ++k) {
      corpus::ScientificFinding a, n;
      a.finding_id = paper.doi + ":a" + std::to_string(k);
      a.source = corpus::Source::kAbstract;
      a.origin_doi = paper.doi;
      a.text = random_text(rng);
      n.finding_id = art.article_id + ":s" + std::to_string(k);
      n.source = corpus::Source::kNews;
      n.origin_doi = paper.doi;
      n.origin_article_id = art.article_id;
      n.extraction_keyword = "found";
      n.text = random_text(rng);
      const double base = 4.0 + noise * 0.5 * rng.normal();
      scoring::CertaintyScore sa, sn;
      sa.finding_id = a.finding_id;
      sa.sentence_certainty = base + noise * 0.6 * rng.normal();
      sn.finding_id = n.finding_id;
      sn.sentence_certainty = base + news_shift + noise * 0.6 * rng.normal();
      for (std::size_t i = 0; i < corpus::kNumAspects; ++i) {
        sa.aspects[i] = static_cast<AspectLabel>(rng.below(3));
        sn.aspects[i] = static_cast<AspectLabel>(rng.below(3));
      }
      w.findings.push_back(a);
      w.findings.push_back(n);
      w.scores.push_back(sa);
      w.scores.push_back(sn);
      w.pairs.push_back({n.finding_id, a.finding_id, 4, 0.5});
    }
  }
  return w;
}

}  // namespace

TEST_SUITE("analysis") {
  TEST_CASE("flesch reading ease on hand-counted text") {
    // 6 words, 1 sentence, 6 syllables.
    CHECK(flesch_reading_ease("The cat sat on the mat.", abbreviations()) ==
          doctest::Approx(206.835 - 1.015 * 6 - 84.6 * 1).epsilon(1e-12));
    // 6 words, 2 sentences, 6 syllables.
    CHECK(flesch_reading_ease("I like tea. It is good.", abbreviations()) ==
          doctest::Approx(206.835 - 1.015 * 3 - 84.6 * 1).epsilon(1e-12));
    const auto c = readability_counts("Science is uncertain.", abbreviations());
    CHECK(c.words == 3);
    CHECK(c.sentences == 1);
    CHECK(c.syllables == 2 + 1 + 3);
    CHECK_THROWS_AS(flesch_reading_ease("  ... ", abbreviations()), Error);
  }

  TEST_CASE("flesch falls as words get longer") {
    const double a = flesch_reading_ease("The cat sat on the mat.", abbreviations());
    const double b = flesch_reading_ease("The caterpillar sat on the mat.", abbreviations());
    const double c = flesch_reading_ease("The caterpillar sat on the mat at the back.", abbreviations());
    CHECK(b < a);
    CHECK(c < a);  // longer sentence, same words
  }

  TEST_CASE("reference level and design columns") {
    const std::vector<std::string> v{"b", "a", "b", "a", "c"};
    CHECK(reference_level(v) == "a");
    const std::vector<std::string> w{"z", "z", "a"};
    CHECK(reference_level(w) == "z");
    Frame f(5);
    f.add_categorical("g", v);
    f.add_numeric("x", {1, 2, 3, 4, 5});
    const std::vector<std::string> vars{"x", "g"};
    const auto d = build_design(f, vars);
    CHECK(d.columns == std::vector<std::string>{"(Intercept)", "x", "g[b]", "g[c]"});
    CHECK(d.find("g")->reference == "a");
    CHECK(d.X(0, 2) == 1.0);
    CHECK(d.X(1, 2) == 0.0);
    CHECK(d.X(4, 3) == 1.0);
  }

  TEST_CASE("ols recovers an exact fit") {
    Frame f(4);
    f.add_numeric("x", {0, 1, 2, 3});
    f.add_numeric("y", {1, 3, 5, 7});
    const auto r = fit_frame(f, {"x"}, SeKind::kClassical);
    CHECK(r.term("(Intercept)").coef == doctest::Approx(1.0));
    CHECK(r.term("x").coef == doctest::Approx(2.0));
    CHECK(r.term("x").p == 0.0);
    CHECK(r.r_squared == doctest::Approx(1.0));
  }

  TEST_CASE("ols matches the normal equations") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      const Frame f = random_frame(80, seed);
      const std::vector<std::string> vars{"x1", "x2", "g"};
      const auto d = build_design(f, vars);
      const Eigen::Map<const Eigen::VectorXd> y(f.numeric("y").data(), 80);
      const Eigen::MatrixXd XtX = d.X.transpose() * d.X;
      const Eigen::MatrixXd inv = XtX.inverse();
      const Eigen::VectorXd beta = inv * d.X.transpose() * y;
      const Eigen::VectorXd e = y - d.X * beta;
      const double n = 80, p = static_cast<double>(d.X.cols());
      const Eigen::MatrixXd V = inv * (e.squaredNorm() / (n - p));
      const Eigen::MatrixXd meat = d.X.transpose() * e.cwiseAbs2().asDiagonal() * d.X;
      const Eigen::MatrixXd Vh = inv * meat * inv * (n / (n - p));

      const auto rc = fit_frame(f, vars, SeKind::kClassical);
      const auto rh = fit_frame(f, vars, SeKind::kHC1);
      for (long j = 0; j < d.X.cols(); ++j) {
        CHECK(std::abs(rc.beta(j) - beta(j)) < 1e-8);
        CHECK(std::abs(rc.terms[j].se - std::sqrt(V(j, j))) < 1e-8);
        CHECK(std::abs(rh.terms[j].se - std::sqrt(Vh(j, j))) < 1e-8);
        CHECK(std::abs(rc.terms[j].ci_lo - (beta(j) - 1.96 * std::sqrt(V(j, j)))) < 1e-8);
      }
      const double ybar = y.mean();
      CHECK(std::abs(rc.r_squared - (1 - e.squaredNorm() / (y.array() - ybar).square().sum())) <
            1e-10);
      // Residuals are orthogonal to every column.
      CHECK((d.X.transpose() * rc.residuals).cwiseAbs().maxCoeff() < 1e-8);
    }
  }

  TEST_CASE("p-values match closed-form t distributions") {
    // df = 1: P(|T| > t) = 1 - 2 atan(t) / pi.
    Frame f1(3);
    f1.add_numeric("x", {0, 1, 2});
    f1.add_numeric("y", {0, 2, 1});
    const auto r1 = fit_frame(f1, {"x"}, SeKind::kClassical);
    const double t1 = std::abs(r1.term("x").t);
    CHECK(r1.term("x").p == doctest::Approx(1 - 2 * std::atan(t1) / std::numbers::pi).epsilon(1e-10));
    // df = 2: P(|T| > t) = 1 - t / sqrt(2 + t^2).
    Frame f2(4);
    f2.add_numeric("x", {0, 1, 2, 3});
    f2.add_numeric("y", {0, 2, 1, 4});
    const auto r2 = fit_frame(f2, {"x"}, SeKind::kClassical);
    const double t2 = std::abs(r2.term("x").t);
    CHECK(r2.term("x").p == doctest::Approx(1 - t2 / std::sqrt(2 + t2 * t2)).epsilon(1e-10));
  }

  TEST_CASE("shifting y moves only the intercept") {
    const Frame f = random_frame(50, 21);
    Frame g = f;
    std::vector<double> y = f.numeric("y");
    for (auto& v : y) v += 3.25;
    g.add_numeric("y", y);
    const std::vector<std::string> vars{"x1", "g"};
    const auto a = fit_frame(f, vars, SeKind::kClassical);
    const auto b = fit_frame(g, vars, SeKind::kClassical);
    CHECK(b.beta(0) == doctest::Approx(a.beta(0) + 3.25).epsilon(1e-10));
    for (long j = 1; j < a.beta.size(); ++j) {
      CHECK(std::abs(a.beta(j) - b.beta(j)) < 1e-10);
      CHECK(std::abs(a.terms[j].se - b.terms[j].se) < 1e-10);
    }
  }

  TEST_CASE("duplicate columns are reported by name") {
    Frame f(6);
    f.add_numeric("x", {1, 2, 3, 4, 5, 7});
    f.add_numeric("x_copy", {2, 4, 6, 8, 10, 14});
    f.add_numeric("y", {1, 2, 2, 4, 5, 5});
    try {
      fit_frame(f, {"x", "x_copy"}, SeKind::kClassical);
      FAIL("fitted a rank-deficient design");
    } catch (const RankDeficientError& e) {
      CHECK(e.columns() == std::vector<std::string>{"x_copy"});
    }
  }

  TEST_CASE("too few observations is a data error") {
    Frame f(2);
    f.add_numeric("x", {1, 2});
    f.add_numeric("y", {1, 3});
    try {
      fit_frame(f, {"x"}, SeKind::kClassical);
      FAIL("fitted with n <= p");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::kData);
    }
  }

  TEST_CASE("margins match counterfactual brute force") {
    const Frame f = random_frame(120, 31);
    const std::vector<std::string> vars{"x1", "g", "x2"};
    const auto r = fit_frame(f, vars, SeKind::kHC1);
    const auto rows = marginal_effects(r, "g");
    const Encoding& enc = *r.design.find("g");
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].level == enc.reference);
    for (const auto& row : rows) {
      Eigen::MatrixXd X = r.design.X;
      for (std::size_t c = 0; c < enc.num_columns; ++c)
        X.col(static_cast<long>(enc.first_column + c)).setConstant(enc.levels[c] == row.level ? 1.0 : 0.0);
      const Eigen::RowVectorXd grad = X.colwise().mean();
      const double want = (X * r.beta).mean();
      const double se = std::sqrt((grad * r.vcov * grad.transpose())(0, 0));
      CHECK(std::abs(row.margin - want) < 1e-8);
      CHECK(std::abs(row.se - se) < 1e-8);
      CHECK(std::abs(row.ci_lo - (want - 1.96 * se)) < 1e-8);
      if (row.level != enc.reference)
        CHECK(std::abs((row.margin - rows[0].margin) - r.term("g[" + row.level + "]").coef) < 1e-8);
    }
    const auto slope = marginal_effects(r, "x1");
    REQUIRE(slope.size() == 1);
    CHECK(slope[0].level == "slope");
    CHECK(std::abs(slope[0].margin - r.term("x1").coef) < 1e-12);
    CHECK_THROWS_AS(marginal_effects(r, "nope"), Error);
  }

  TEST_CASE("fit_spec drops incomplete rows and constant controls with notes") {
    Frame f = random_frame(60, 41);
    std::vector<double> x1 = f.numeric("x1");
    x1[3] = std::nan("");
    f.add_numeric("x1", x1);
    f.add_numeric("flat", std::vector<double>(60, 2.0));
    const RegressionSpec spec{"t", "y", {"g"}, {"x1", "flat"}, {}, "all rows"};
    const auto r = fit_spec(spec, f);
    CHECK(r.n_obs == 59);
    CHECK(has_note(r, "dropped 1 rows with missing values"));
    CHECK(has_note(r, "control flat dropped"));
    CHECK(has_note(r, "reference g="));
    CHECK_THROWS_AS(r.term("flat"), Error);
  }

  TEST_CASE("fit_spec drops collinear controls but not key predictors") {
    Frame f = random_frame(60, 42);
    std::vector<double> dup = f.numeric("x2");
    for (auto& v : dup) v = 3 * v - 1;
    f.add_numeric("x2_scaled", dup);
    const RegressionSpec ok{"t", "y", {"x1"}, {"x2", "x2_scaled"}, {}, "all"};
    const auto r = fit_spec(ok, f);
    CHECK(has_note(r, "control x2_scaled dropped: collinear"));
    const RegressionSpec bad{"t", "y", {"x2", "x2_scaled"}, {}, {}, "all"};
    CHECK_THROWS_AS(fit_spec(bad, f), RankDeficientError);
  }

  TEST_CASE("quantile bins") {
    const std::vector<double> v{5, 1, 8, 3, 2, 7, 4, 6, std::nan("")};
    std::vector<double> edges;
    const auto b = quantile_bins(v, 4, &edges);
    CHECK(edges == std::vector<double>{2.75, 4.5, 6.25});
    CHECK(b == std::vector<std::string>{"Q3", "Q1", "Q4", "Q2", "Q1", "Q4", "Q2", "Q3", ""});
    const std::vector<double> tied{1, 1, 1, 1, 2};
    const auto t = quantile_bins(tied, 4, &edges);
    CHECK(edges.size() <= 1);
    CHECK(t.back() != t.front());
  }

  TEST_CASE("rq1 recovers a planted news effect") {
    const auto w = make_world(80, -0.5, 7);
    const auto rs = run_rq("rq1", w.data());
    REQUIRE(rs.size() == 1);
    const auto& t = rs[0].term("source[news]");
    CHECK(rs[0].n_obs == 320);
    CHECK(t.coef < 0);
    CHECK(t.p < 0.01);
    CHECK(std::abs(t.coef + 0.5) < 4 * t.se);
    REQUIRE(rs[0].margins.size() == 2);
  }

  TEST_CASE("rq1 under the null rarely rejects") {
    int kept = 0;
    for (std::uint64_t rep = 0; rep < 50; ++rep) {
      const auto w = make_world(40, 0.0, 1000 + rep);
      const auto& t = run_rq("rq1", w.data())[0].term("source[news]");
      if (std::abs(t.coef) < 2 * t.se) ++kept;
    }
    CHECK(kept >= 45);
  }

  TEST_CASE("every rq spec runs on synthetic data") {
    const auto w = make_world(60, -0.3, 9);
    CHECK(run_rq("rq2", w.data()).size() == 12);
    CHECK(run_rq("rq3", w.data()).size() == 1);
    for (const char* name : {"rq4", "rq5"}) {
      const auto rs = run_rq(name, w.data());
      REQUIRE(rs.size() == 4);
      CHECK(has_note(rs[1], "edges"));
    }
    CHECK_THROWS_AS(run_rq("rq9", w.data()), Error);
  }

  TEST_CASE("hedge curve of a perfectly decreasing relation") {
    const std::vector<std::pair<std::size_t, double>> pts{{0, 5}, {0, 5}, {1, 4}, {2, 3}, {3, 2}};
    const auto c = hedge_certainty_curve(pts);
    CHECK(c.r == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(c.n == 5);
    REQUIRE(c.points.size() == 4);
    CHECK(c.points[0].n == 2);
    CHECK(c.points[3].mean_certainty == 2.0);
    const std::vector<std::pair<std::size_t, double>> flat{{0, 3}, {1, 3}};
    CHECK_THROWS_AS(hedge_certainty_curve(flat), Error);
  }

  TEST_CASE("aspect association finds a planted probability gap") {
    std::vector<std::pair<double, corpus::AspectLabels>> items;
    Rng rng(5);
    for (int i = 0; i < 200; ++i) {
      corpus::AspectLabels l{};
      const bool unc = i % 2 == 0;
      l[2] = unc ? AspectLabel::kUncertain : AspectLabel::kCertain;
      items.emplace_back((unc ? 3.0 : 4.0) + (i % 4 < 2 ? 0.1 : -0.1), l);
    }
    const auto a = aspect_sentence_association(items);
    CHECK(a.n == 200);
    CHECK(a.corpus_mean == doctest::Approx(3.5));
    REQUIRE(a.cells.size() == 12);
    const auto& cert = a.cells[2 * 2];
    const auto& unc = a.cells[2 * 2 + 1];
    CHECK(cert.aspect == corpus::Aspect::kProbability);
    CHECK(unc.label == AspectLabel::kUncertain);
    CHECK(unc.mean - cert.mean == doctest::Approx(-1.0));
    CHECK(cert.relative == doctest::Approx(0.5));
    // s = 0.1 * sqrt(100/99)
    const double half = 1.96 * 0.1 * std::sqrt(100.0 / 99.0) / 10.0;
    CHECK(cert.ci_hi - cert.mean == doctest::Approx(half));
    CHECK(a.cells[0].omitted);
    CHECK_FALSE(cert.omitted);
    CHECK_THROWS_AS(aspect_sentence_association(
                        std::span<const std::pair<double, corpus::AspectLabels>>{}),
                    Error);
  }

  TEST_CASE("regression CSV output") {
    const Frame f = random_frame(40, 51);
    const RegressionSpec spec{"demo_fit", "y", {"g"}, {"x1"}, {}, "all"};
    auto r = fit_spec(spec, f);
    r.margins = marginal_effects(r, "g");
    certkit::testing::TempDir dir;
    Manifest m;
    m.command = "analyze";
    const auto files = write_regression(dir.path(), r, m, true);
    CHECK(files.size() == 3);
    const std::string csv = certkit::testing::slurp(dir / "demo_fit.csv");
    CHECK(csv.rfind("# manifest: ", 0) == 0);
    CHECK(csv.find("\nterm,coef,se,t,p,ci_lo,ci_hi\n") != std::string::npos);
    CHECK(csv.find("\ng[mid],") != std::string::npos);
    CHECK(certkit::testing::slurp(dir / "demo_fit_margins.svg").rfind("<svg", 0) == 0);
    CHECK(format_number(std::nan("")) == "nan");
    CHECK(format_number(0.5) == "0.5");
  }

  TEST_CASE("flesch from counts") {
    CHECK(flesch_from_counts({10, 1, 10}) == doctest::Approx(112.085).epsilon(1e-12));
    CHECK(flesch_from_counts({1, 1, 1}) == doctest::Approx(121.22).epsilon(1e-12));
  }

  TEST_CASE("ols on y = 3x + 2") {
    Frame f(5);
    f.add_numeric("x", {-2, 0, 1, 4, 7});
    f.add_numeric("y", {-4, 2, 5, 14, 23});
    const auto r = fit_frame(f, {"x"}, SeKind::kHC1);
    CHECK(r.term("x").coef == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(r.term("(Intercept)").coef == doctest::Approx(2.0).epsilon(1e-12));
  }

  TEST_CASE("categorical margins differ by the coefficient") {
    Frame f(8);
    f.add_categorical("g", {"a", "b", "a", "b", "a", "b", "a", "b"});
    const std::vector<double> x{1, 2, 3, 4, 5, 6, 7, 9};
    f.add_numeric("x", x);
    std::vector<double> y;
    for (std::size_t i = 0; i < 8; ++i) y.push_back(1.0 + 0.25 * x[i] + (i % 2 ? 0.4 : 0.0));
    f.add_numeric("y", y);
    const auto r = fit_frame(f, {"g", "x"}, SeKind::kClassical);
    const auto m = marginal_effects(r, "g");
    REQUIRE(m.size() == 2);
    CHECK(std::abs((m[1].margin - m[0].margin) - 0.4) < 1e-10);
  }

  TEST_CASE("rq1 recovers an exact planted shift") {
    const auto w = make_world(30, -0.5, 11, 0.0);
    const auto& t = run_rq("rq1", w.data())[0].term("source[news]");
    CHECK(std::abs(t.coef + 0.5) < 1e-8);
    CHECK(t.p < 1e-12);
  }
}
