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

#include "corpus/types.hpp"

#include "common/error.hpp"
#include "lexicon/tokenize.hpp"

namespace certkit::corpus {
namespace {

template <typename Enum, std::size_t N>
Enum parse_enum(std::string_view s, const std::array<std::pair<std::string_view, Enum>, N>& table,
                std::string_view what) {
  for (const auto& [name, value] : table)
    if (name == s) return value;
  throw data_error("unknown " + std::string(what) + " '" + std::string(s) + "'");
}

constexpr std::array<std::pair<std::string_view, Role>, 5> kRoles{{
    {"background", Role::kBackground},
    {"method", Role::kMethod},
    {"introduction", Role::kIntroduction},
    {"result", Role::kResult},
    {"conclusion", Role::kConclusion},
}};
constexpr std::array<std::pair<std::string_view, Source>, 2> kSources{{
    {"news", Source::kNews},
    {"abstract", Source::kAbstract},
}};
constexpr std::array<std::pair<std::string_view, Aspect>, 6> kAspects{{
    {"number", Aspect::kNumber},
    {"extent", Aspect::kExtent},
    {"probability", Aspect::kProbability},
    {"framing", Aspect::kFraming},
    {"condition", Aspect::kCondition},
    {"suggestion", Aspect::kSuggestion},
}};
constexpr std::array<std::pair<std::string_view, AspectLabel>, 3> kLabels{{
    {"not_present", AspectLabel::kNotPresent},
    {"certain", AspectLabel::kCertain},
    {"uncertain", AspectLabel::kUncertain},
}};
constexpr std::array<std::pair<std::string_view, AnnotationKind>, 3> kKinds{{
    {"sentence_level", AnnotationKind::kSentenceLevel},
    {"aspect_level", AnnotationKind::kAspectLevel},
    {"bad_text", AnnotationKind::kBadText},
}};

template <typename Enum, std::size_t N>
std::string_view name_of(Enum v, const std::array<std::pair<std::string_view, Enum>, N>& table) {
  for (const auto& [name, value] : table)
    if (value == v) return name;
  return "?";
}

const nlohmann::json& require(const nlohmann::json& j, const char* key) {
  if (!j.is_object()) throw data_error("record is not a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw data_error(std::string("missing field '") + key + "'");
  return *it;
}

std::string require_string(const nlohmann::json& j, const char* key) {
  const auto& v = require(j, key);
  if (!v.is_string()) throw data_error(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

double require_number(const nlohmann::json& j, const char* key) {
  const auto& v = require(j, key);
  if (!v.is_number()) throw data_error(std::string("field '") + key + "' must be a number");
  return v.get<double>();
}

}  // namespace

std::string_view to_string(Role r) { return name_of(r, kRoles); }
Role parse_role(std::string_view s) { return parse_enum(s, kRoles, "role"); }
std::string_view to_string(Source s) { return name_of(s, kSources); }
Source parse_source(std::string_view s) { return parse_enum(s, kSources, "source"); }
std::string_view to_string(Aspect a) { return name_of(a, kAspects); }
Aspect parse_aspect(std::string_view s) { return parse_enum(s, kAspects, "aspect"); }
std::string_view to_string(AspectLabel l) { return name_of(l, kLabels); }
AspectLabel parse_aspect_label(std::string_view s) { return parse_enum(s, kLabels, "aspect label"); }
std::string_view to_string(AnnotationKind k) { return name_of(k, kKinds); }
AnnotationKind parse_annotation_kind(std::string_view s) {
  return parse_enum(s, kKinds, "annotation kind");
}

const PaperMeta* Corpus::find_paper(std::string_view doi) const {
  for (const auto& p : papers)
    if (p.doi == doi) return &p;
  return nullptr;
}

nlohmann::ordered_json to_json(const PaperMeta& p) {
  nlohmann::ordered_json j;
  j["doi"] = p.doi;
  j["journal_impact_factor"] = p.journal_impact_factor;
  j["num_authors"] = p.num_authors;
  j["field"] = p.field;
  j["author_rank"] = p.author_rank;
  j["affiliation_rank"] = p.affiliation_rank;
  auto sentences = nlohmann::ordered_json::array();
  for (const auto& s : p.abstract_sentences) {
    nlohmann::ordered_json sj;
    sj["text"] = s.text;
    sj["role"] = to_string(s.role);
    sentences.push_back(std::move(sj));
  }
  j["abstract_sentences"] = std::move(sentences);
  return j;
}

nlohmann::ordered_json to_json(const NewsArticle& a) {
  nlohmann::ordered_json j;
  j["article_id"] = a.article_id;
  j["outlet"] = a.outlet;
  j["body"] = a.body;
  j["linked_dois"] = a.linked_dois;
  return j;
}

nlohmann::ordered_json to_json(const ScientificFinding& f) {
  nlohmann::ordered_json j;
  j["finding_id"] = f.finding_id;
  j["text"] = f.text;
  j["source"] = to_string(f.source);
  j["origin_doi"] = f.origin_doi;
  if (f.origin_article_id) j["origin_article_id"] = *f.origin_article_id;
  if (f.extraction_keyword) j["extraction_keyword"] = *f.extraction_keyword;
  j["char_span"] = {f.char_span.start, f.char_span.end};
  return j;
}

nlohmann::ordered_json aspects_to_json(const AspectLabels& labels) {
  nlohmann::ordered_json j;
  for (auto a : kAllAspects) j[std::string(to_string(a))] = to_string(labels[static_cast<int>(a)]);
  return j;
}

nlohmann::ordered_json to_json(const AnnotationRecord& r) {
  nlohmann::ordered_json j;
  j["finding_id"] = r.finding_id;
  j["annotator_id"] = r.annotator_id;
  j["kind"] = to_string(r.kind);
  if (r.likert) j["likert"] = *r.likert;
  if (r.aspects) j["aspects"] = aspects_to_json(*r.aspects);
  return j;
}

PaperMeta paper_from_json(const nlohmann::json& j) {
  PaperMeta p;
  p.doi = require_string(j, "doi");
  if (p.doi.empty()) throw data_error("doi must be nonempty");
  p.journal_impact_factor = require_number(j, "journal_impact_factor");
  if (p.journal_impact_factor < 0) throw data_error("journal_impact_factor must be >= 0");
  const auto& na = require(j, "num_authors");
  if (!na.is_number_integer() || na.get<long long>() < 1)
    throw data_error("num_authors must be a positive integer");
  p.num_authors = na.get<int>();
  p.field = require_string(j, "field");
  p.author_rank = require_number(j, "author_rank");
  p.affiliation_rank = require_number(j, "affiliation_rank");
  const auto& sentences = require(j, "abstract_sentences");
  if (!sentences.is_array()) throw data_error("abstract_sentences must be an array");
  for (const auto& s : sentences) {
    p.abstract_sentences.push_back({require_string(s, "text"), parse_role(require_string(s, "role"))});
  }
  return p;
}

NewsArticle article_from_json(const nlohmann::json& j) {
  NewsArticle a;
  a.article_id = require_string(j, "article_id");
  if (a.article_id.empty()) throw data_error("article_id must be nonempty");
  a.outlet = require_string(j, "outlet");
  a.body = require_string(j, "body");
  const auto& dois = require(j, "linked_dois");
  if (!dois.is_array()) throw data_error("linked_dois must be an array");
  for (const auto& d : dois) {
    if (!d.is_string()) throw data_error("linked_dois entries must be strings");
    a.linked_dois.push_back(d.get<std::string>());
  }
  a.word_count = lexicon::count_words(a.body);
  return a;
}

ScientificFinding finding_from_json(const nlohmann::json& j) {
  ScientificFinding f;
  f.finding_id = require_string(j, "finding_id");
  f.text = require_string(j, "text");
  if (f.text.empty()) throw data_error("finding text must be nonempty");
  f.source = parse_source(require_string(j, "source"));
  f.origin_doi = require_string(j, "origin_doi");
  if (j.contains("origin_article_id") && !j["origin_article_id"].is_null())
    f.origin_article_id = j["origin_article_id"].get<std::string>();
  if (j.contains("extraction_keyword") && !j["extraction_keyword"].is_null())
    f.extraction_keyword = j["extraction_keyword"].get<std::string>();
  if (f.source == Source::kNews && !f.extraction_keyword)
    throw data_error("news finding requires extraction_keyword");
  if (j.contains("char_span")) {
    const auto& span = j["char_span"];
    if (!span.is_array() || span.size() != 2) throw data_error("char_span must be [start, end]");
    f.char_span = {span[0].get<std::size_t>(), span[1].get<std::size_t>()};
    if (f.char_span.end < f.char_span.start) throw data_error("char_span end < start");
  }
  return f;
}

AspectLabels aspects_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw data_error("aspects must be an object");
  if (j.size() != kNumAspects) throw data_error("aspects must have exactly the six aspect keys");
  AspectLabels labels{};
  for (auto a : kAllAspects) {
    const auto key = std::string(to_string(a));
    auto it = j.find(key);
    if (it == j.end()) throw data_error("aspects missing key '" + key + "'");
    if (!it->is_string()) throw data_error("aspect '" + key + "' must be a string");
    labels[static_cast<int>(a)] = parse_aspect_label(it->get<std::string>());
  }
  return labels;
}

AnnotationRecord annotation_from_json(const nlohmann::json& j) {
  AnnotationRecord r;
  r.finding_id = require_string(j, "finding_id");
  r.annotator_id = require_string(j, "annotator_id");
  r.kind = parse_annotation_kind(require_string(j, "kind"));
  const bool has_likert = j.contains("likert") && !j["likert"].is_null();
  const bool has_aspects = j.contains("aspects") && !j["aspects"].is_null();
  if (has_likert) {
    const auto& v = j["likert"];
    if (!v.is_number_integer()) throw data_error("likert must be an integer");
    const int value = v.get<int>();
    if (value < 1 || value > 6) throw data_error("likert must be in 1..6");
    r.likert = value;
  }
  if (has_aspects) r.aspects = aspects_from_json(j["aspects"]);
  if ((r.kind == AnnotationKind::kSentenceLevel) != has_likert)
    throw data_error("likert present iff kind is sentence_level");
  if ((r.kind == AnnotationKind::kAspectLevel) != has_aspects)
    throw data_error("aspects present iff kind is aspect_level");
  return r;
}

}  // namespace certkit::corpus
