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

#include "analysis/rq.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <set>

#include "analysis/flesch.hpp"
#include "analysis/margins.hpp"
#include "common/error.hpp"
#include "lexicon/tokenize.hpp"

namespace certkit::analysis {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

const std::vector<std::string> kPaperControls{"journal_impact_factor", "author_rank",
                                              "affiliation_rank", "finding_length", "flesch"};

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

bool degenerate(const Frame& f, const std::string& name) {
  if (f.kind(name) == VarKind::kContinuous) {
    const auto& v = f.numeric(name);
    return std::adjacent_find(v.begin(), v.end(), std::not_equal_to<>()) == v.end();
  }
  const auto& v = f.categorical(name);
  return std::set<std::string>(v.begin(), v.end()).size() < 2;
}

// One observation: a scored finding plus its paper (and article for news).
struct Obs {
  const corpus::ScientificFinding* finding = nullptr;
  const scoring::CertaintyScore* score = nullptr;
  const corpus::PaperMeta* paper = nullptr;
  const corpus::NewsArticle* article = nullptr;
};

class Index {
 public:
  explicit Index(const RqData& d) : data_(d) {
    if (d.corpus == nullptr) throw usage_error("analysis: no corpus");
    for (const auto& f : d.findings) findings_[f.finding_id] = &f;
    for (const auto& s : d.scores) scores_[s.finding_id] = &s;
    for (const auto& a : d.corpus->articles) articles_[a.article_id] = &a;
  }

  // Null when the finding or its score is unknown.
  std::optional<Obs> obs(const std::string& finding_id) const {
    auto f = findings_.find(finding_id);
    auto s = scores_.find(finding_id);
    if (f == findings_.end() || s == scores_.end()) return std::nullopt;
    Obs o{f->second, s->second, data_.corpus->find_paper(f->second->origin_doi), nullptr};
    if (f->second->origin_article_id) {
      auto a = articles_.find(*f->second->origin_article_id);
      if (a != articles_.end()) o.article = a->second;
    }
    return o;
  }

  std::vector<Obs> all(corpus::Source source, std::size_t* unscored) const {
    std::vector<Obs> out;
    for (const auto& f : data_.findings) {
      if (f.source != source) continue;
      if (auto o = obs(f.finding_id)) {
        out.push_back(*o);
      } else {
        ++*unscored;
      }
    }
    return out;
  }

  std::span<const std::string> abbreviations() const { return data_.abbreviations; }

 private:
  const RqData& data_;
  std::map<std::string, const corpus::ScientificFinding*> findings_;
  std::map<std::string, const scoring::CertaintyScore*> scores_;
  std::map<std::string, const corpus::NewsArticle*> articles_;
};

double safe_flesch(const std::string& text, std::span<const std::string> abbreviations) {
  try {
    return flesch_reading_ease(text, abbreviations);
  } catch (const Error&) {
    return kNaN;
  }
}

// Standard covariates for a list of observations.
Frame covariates(const std::vector<Obs>& rows, std::span<const std::string> abbreviations) {
  const std::size_t n = rows.size();
  std::vector<double> certainty(n), jif(n), authors(n), arank(n), frank(n), length(n), flesch(n);
  std::vector<std::string> source(n), field(n), outlet(n);
  std::vector<std::vector<std::string>> aspects(corpus::kNumAspects, std::vector<std::string>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const auto& o = rows[i];
    certainty[i] = o.score->sentence_certainty;
    source[i] = std::string(corpus::to_string(o.finding->source));
    length[i] = static_cast<double>(lexicon::count_words(o.finding->text));
    flesch[i] = safe_flesch(o.finding->text, abbreviations);
    if (o.paper) {
      jif[i] = o.paper->journal_impact_factor;
      authors[i] = o.paper->num_authors;
      arank[i] = o.paper->author_rank;
      frank[i] = o.paper->affiliation_rank;
      field[i] = o.paper->field;
    } else {
      jif[i] = authors[i] = arank[i] = frank[i] = kNaN;
    }
    if (o.article) outlet[i] = o.article->outlet;
    for (std::size_t a = 0; a < corpus::kNumAspects; ++a)
      aspects[a][i] = std::string(corpus::to_string(o.score->aspects[a]));
  }
  Frame f(n);
  f.add_numeric("certainty", std::move(certainty));
  f.add_numeric("journal_impact_factor", std::move(jif));
  f.add_numeric("num_authors", std::move(authors));
  f.add_numeric("author_rank", std::move(arank));
  f.add_numeric("affiliation_rank", std::move(frank));
  f.add_numeric("finding_length", std::move(length));
  f.add_numeric("flesch", std::move(flesch));
  f.add_categorical("source", std::move(source));
  f.add_categorical("field", std::move(field));
  f.add_categorical("outlet", std::move(outlet));
  for (std::size_t a = 0; a < corpus::kNumAspects; ++a)
    f.add_categorical(std::string(corpus::to_string(corpus::kAllAspects[a])),
                      std::move(aspects[a]));
  return f;
}

struct PairRows {
  std::vector<Obs> abstract_rows;
  std::vector<Obs> news_rows;
  std::size_t dropped = 0;
};

PairRows pair_rows(const Index& idx, std::span<const matching::MatchedPair> pairs) {
  if (pairs.empty()) throw data_error("analysis: no matched pairs");
  PairRows out;
  for (const auto& p : pairs) {
    auto a = idx.obs(p.abstract_finding_id);
    auto n = idx.obs(p.news_finding_id);
    if (!a || !n) {
      ++out.dropped;
      continue;
    }
    out.abstract_rows.push_back(*a);
    out.news_rows.push_back(*n);
  }
  return out;
}

void note_dropped(RegressionResult& r, std::size_t n, const std::string& what) {
  if (n > 0) r.notes.push_back("dropped " + std::to_string(n) + " " + what);
}

std::vector<RegressionResult> run_rq1_rq2(const Index& idx, const RqData& data, bool rq2,
                                          const RqOptions& opt) {
  auto pr = pair_rows(idx, data.pairs);
  std::vector<Obs> rows = pr.abstract_rows;
  rows.insert(rows.end(), pr.news_rows.begin(), pr.news_rows.end());
  Frame frame = covariates(rows, idx.abbreviations());

  RegressionSpec spec{"rq1", "certainty", {"source"}, kPaperControls, {"field"},
                      "two rows (abstract, news) per matched pair"};
  std::vector<RegressionResult> out;
  if (!rq2) {
    out.push_back(fit_spec(spec, frame, opt.se_kind));
  } else {
    for (auto aspect : corpus::kAllAspects) {
      const std::string a(corpus::to_string(aspect));
      for (auto label : {corpus::AspectLabel::kCertain, corpus::AspectLabel::kUncertain}) {
        const std::string l(corpus::to_string(label));
        std::vector<double> y(rows.size());
        const auto& labels = frame.categorical(a);
        for (std::size_t i = 0; i < rows.size(); ++i) y[i] = labels[i] == l ? 1.0 : 0.0;
        Frame f = frame;
        f.add_numeric("y", std::move(y));
        spec.name = "rq2_" + a + "_" + l;
        spec.dependent = "y";
        auto r = fit_spec(spec, f, opt.se_kind);
        r.notes.insert(r.notes.begin(), "outcome: " + a + " == " + l + " (linear probability)");
        out.push_back(std::move(r));
      }
    }
  }
  for (auto& r : out) note_dropped(r, pr.dropped, "pairs with unscored findings");
  return out;
}

std::vector<RegressionResult> run_rq3(const Index& idx, const RqData& data, const RqOptions& opt) {
  auto pr = pair_rows(idx, data.pairs);
  Frame frame = covariates(pr.news_rows, idx.abbreviations());
  std::vector<double> abstract_certainty;
  for (const auto& o : pr.abstract_rows) abstract_certainty.push_back(o.score->sentence_certainty);
  frame.add_numeric("abstract_certainty", std::move(abstract_certainty));
  RegressionSpec spec{"rq3", "certainty", {}, kPaperControls, {"field", "outlet"},
                      "news finding of each matched pair"};
  spec.controls.insert(spec.controls.begin(), "abstract_certainty");
  for (std::size_t a = 0; a < corpus::kNumAspects; ++a) {
    const std::string name = "abstract_" + std::string(corpus::to_string(corpus::kAllAspects[a]));
    std::vector<std::string> v;
    for (const auto& o : pr.abstract_rows)
      v.emplace_back(corpus::to_string(o.score->aspects[a]));
    frame.add_categorical(name, std::move(v));
    spec.predictors.push_back(name);
  }
  auto r = fit_spec(spec, frame, opt.se_kind);
  note_dropped(r, pr.dropped, "pairs with unscored findings");
  return {std::move(r)};
}

std::vector<RegressionResult> run_rq4_rq5(const Index& idx, bool rq5, const RqOptions& opt) {
  const std::string key = rq5 ? "num_authors" : "journal_impact_factor";
  const std::string other = rq5 ? "journal_impact_factor" : "num_authors";
  const std::string base = rq5 ? "rq5" : "rq4";
  std::vector<RegressionResult> out;
  for (auto source : {corpus::Source::kAbstract, corpus::Source::kNews}) {
    std::size_t unscored = 0;
    auto rows = idx.all(source, &unscored);
    const std::string sname(corpus::to_string(source));
    if (rows.empty()) throw data_error("analysis: no scored " + sname + " findings");
    Frame frame = covariates(rows, idx.abbreviations());

    RegressionSpec spec;
    spec.dependent = "certainty";
    spec.controls = {other, "author_rank", "affiliation_rank", "finding_length", "flesch"};
    spec.fixed_effects = {"field"};
    if (source == corpus::Source::kNews) spec.fixed_effects.push_back("outlet");
    spec.sample_filter = "all scored " + sname + " findings";

    spec.name = base + "_" + sname;
    spec.predictors = {key};
    auto cont = fit_spec(spec, frame, opt.se_kind);
    note_dropped(cont, unscored, "unscored findings");
    out.push_back(std::move(cont));

    std::vector<double> edges;
    const std::string binned = key + "_bin";
    frame.add_categorical(binned, quantile_bins(frame.numeric(key), opt.bins, &edges));
    spec.name = base + "_" + sname + "_binned";
    spec.predictors = {binned};
    auto b = fit_spec(spec, frame, opt.se_kind);
    std::string e;
    for (double x : edges) e += (e.empty() ? "" : " ") + fmt(x);
    b.notes.push_back(binned + " edges: " + (e.empty() ? "(none)" : e));
    note_dropped(b, unscored, "unscored findings");
    out.push_back(std::move(b));
  }
  return out;
}

}  // namespace

std::vector<std::string> quantile_bins(std::span<const double> values, std::size_t k,
                                       std::vector<double>* edges) {
  if (k == 0) throw usage_error("quantile_bins: k must be positive");
  std::vector<double> sorted;
  for (double v : values)
    if (std::isfinite(v)) sorted.push_back(v);
  std::sort(sorted.begin(), sorted.end());
  std::vector<double> cuts;
  if (!sorted.empty()) {
    for (std::size_t i = 1; i < k; ++i) {
      const double pos = static_cast<double>(i) / static_cast<double>(k) *
                         static_cast<double>(sorted.size() - 1);
      const auto lo = static_cast<std::size_t>(std::floor(pos));
      const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
      const double c = sorted[lo] + (pos - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
      if ((cuts.empty() || c > cuts.back()) && c < sorted.back()) cuts.push_back(c);
    }
  }
  std::vector<std::string> out;
  out.reserve(values.size());
  for (double v : values) {
    if (!std::isfinite(v)) {
      out.emplace_back();
      continue;
    }
    const auto b = static_cast<std::size_t>(std::lower_bound(cuts.begin(), cuts.end(), v) -
                                            cuts.begin());
    out.push_back("Q" + std::to_string(b + 1));
  }
  if (edges) *edges = cuts;
  return out;
}

RegressionResult fit_spec(const RegressionSpec& spec, const Frame& frame, SeKind se_kind) {
  if (std::find(spec.predictors.begin(), spec.predictors.end(), spec.dependent) !=
      spec.predictors.end())
    throw usage_error(spec.name + ": dependent variable listed as predictor");

  std::vector<std::string> used{spec.dependent};
  for (const auto* list : {&spec.predictors, &spec.controls, &spec.fixed_effects})
    used.insert(used.end(), list->begin(), list->end());

  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < frame.rows(); ++i) {
    bool ok = true;
    for (const auto& v : used) ok = ok && !frame.missing(v, i);
    if (ok) keep.push_back(i);
  }
  const std::size_t incomplete = frame.rows() - keep.size();
  Frame f = frame.select(keep);
  if (f.rows() == 0) throw data_error(spec.name + ": no complete observations");

  std::vector<std::string> notes;
  if (incomplete > 0)
    notes.push_back("dropped " + std::to_string(incomplete) + " rows with missing values");

  std::vector<std::string> predictors;
  for (const auto& p : spec.predictors) {
    if (degenerate(f, p)) {
      notes.push_back("predictor " + p + " dropped: constant in sample");
    } else {
      predictors.push_back(p);
    }
  }
  if (predictors.empty()) throw data_error(spec.name + ": no predictor varies in the sample");
  std::vector<std::string> controls;
  for (const auto* list : {&spec.controls, &spec.fixed_effects}) {
    for (const auto& c : *list) {
      if (degenerate(f, c)) {
        notes.push_back("control " + c + " dropped: constant in sample");
      } else {
        controls.push_back(c);
      }
    }
  }

  Eigen::VectorXd y = Eigen::Map<const Eigen::VectorXd>(
      f.numeric(spec.dependent).data(), static_cast<Eigen::Index>(f.rows()));
  for (;;) {
    std::vector<std::string> vars = predictors;
    vars.insert(vars.end(), controls.begin(), controls.end());
    Design d = build_design(f, vars);
    if (static_cast<std::size_t>(d.X.cols()) >= f.rows() && !controls.empty()) {
      notes.push_back("control " + controls.back() + " dropped: too few observations");
      controls.pop_back();
      continue;
    }
    try {
      auto r = ols_fit(d, y, se_kind);
      r.name = spec.name;
      r.dependent = spec.dependent;
      r.notes = std::move(notes);
      r.notes.insert(r.notes.begin(), "sample: " + spec.sample_filter);
      for (const auto& e : r.design.encodings)
        if (e.kind == VarKind::kCategorical)
          r.notes.push_back("reference " + e.variable + "=" + e.reference);
      for (const auto& p : predictors) {
        auto m = marginal_effects(r, p);
        r.margins.insert(r.margins.end(), m.begin(), m.end());
      }
      return r;
    } catch (const RankDeficientError& err) {
      // Attribute each collinear column to its variable; only controls may go.
      std::set<std::string> drop;
      for (const auto& col : err.columns()) {
        for (const auto& e : d.encodings) {
          for (std::size_t c = e.first_column; c < e.first_column + e.num_columns; ++c)
            if (d.columns[c] == col) drop.insert(e.variable);
        }
      }
      bool removed = false;
      for (const auto& v : drop) {
        auto it = std::find(controls.begin(), controls.end(), v);
        if (it != controls.end()) {
          controls.erase(it);
          notes.push_back("control " + v + " dropped: collinear with earlier columns");
          removed = true;
        }
      }
      if (!removed) throw;
    }
  }
}

const std::vector<std::string>& rq_names() {
  static const std::vector<std::string> names{"rq1", "rq2", "rq3", "rq4", "rq5"};
  return names;
}

std::vector<RegressionResult> run_rq(std::string_view name, const RqData& data,
                                     const RqOptions& options) {
  Index idx(data);
  if (name == "rq1") return run_rq1_rq2(idx, data, false, options);
  if (name == "rq2") return run_rq1_rq2(idx, data, true, options);
  if (name == "rq3") return run_rq3(idx, data, options);
  if (name == "rq4") return run_rq4_rq5(idx, false, options);
  if (name == "rq5") return run_rq4_rq5(idx, true, options);
  throw usage_error("unknown analysis '" + std::string(name) + "'");
}

}  // namespace certkit::analysis
