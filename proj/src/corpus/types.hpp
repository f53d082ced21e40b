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

#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace certkit::corpus {

enum class Role { kBackground, kMethod, kIntroduction, kResult, kConclusion };

std::string_view to_string(Role r);
Role parse_role(std::string_view s);

struct AbstractSentence {
  std::string text;
  Role role = Role::kBackground;

  bool operator==(const AbstractSentence&) const = default;
};

struct PaperMeta {
  std::string doi;
  double journal_impact_factor = 0.0;
  int num_authors = 1;
  std::string field;
  double author_rank = 0.0;
  double affiliation_rank = 0.0;
  std::vector<AbstractSentence> abstract_sentences;

  bool operator==(const PaperMeta&) const = default;
};

struct NewsArticle {
  std::string article_id;
  std::string outlet;
  std::string body;
  std::vector<std::string> linked_dois;
  std::size_t word_count = 0;  // whitespace token count of body

  bool operator==(const NewsArticle&) const = default;
};

enum class Source { kNews, kAbstract };
std::string_view to_string(Source s);
Source parse_source(std::string_view s);

struct CharSpan {
  std::size_t start = 0;
  std::size_t end = 0;

  bool operator==(const CharSpan&) const = default;
};

struct ScientificFinding {
  std::string finding_id;
  std::string text;
  Source source = Source::kAbstract;
  std::string origin_doi;
  std::optional<std::string> origin_article_id;
  std::optional<std::string> extraction_keyword;
  CharSpan char_span;

  bool operator==(const ScientificFinding&) const = default;
};

// Six certainty aspects, in the canonical order used by every table.
enum class Aspect { kNumber, kExtent, kProbability, kFraming, kCondition, kSuggestion };
inline constexpr std::size_t kNumAspects = 6;
inline constexpr std::array<Aspect, kNumAspects> kAllAspects{
    Aspect::kNumber,  Aspect::kExtent,    Aspect::kProbability,
    Aspect::kFraming, Aspect::kCondition, Aspect::kSuggestion};
std::string_view to_string(Aspect a);
Aspect parse_aspect(std::string_view s);

enum class AspectLabel { kNotPresent = 0, kCertain = 1, kUncertain = 2 };
inline constexpr std::size_t kNumLabels = 3;
std::string_view to_string(AspectLabel l);
AspectLabel parse_aspect_label(std::string_view s);

using AspectLabels = std::array<AspectLabel, kNumAspects>;

enum class AnnotationKind { kSentenceLevel, kAspectLevel, kBadText };
std::string_view to_string(AnnotationKind k);
AnnotationKind parse_annotation_kind(std::string_view s);

struct AnnotationRecord {
  std::string finding_id;
  std::string annotator_id;
  AnnotationKind kind = AnnotationKind::kSentenceLevel;
  std::optional<int> likert;
  std::optional<AspectLabels> aspects;

  bool operator==(const AnnotationRecord&) const = default;
};

struct Corpus {
  std::vector<PaperMeta> papers;
  std::vector<NewsArticle> articles;

  const PaperMeta* find_paper(std::string_view doi) const;
};

// JSON conversion; field names follow the on-disk schemas exactly. The
// from_json functions throw certkit::Error (kData) on schema violations.
nlohmann::ordered_json to_json(const PaperMeta& p);
nlohmann::ordered_json to_json(const NewsArticle& a);
nlohmann::ordered_json to_json(const ScientificFinding& f);
nlohmann::ordered_json to_json(const AnnotationRecord& r);
nlohmann::ordered_json aspects_to_json(const AspectLabels& labels);

PaperMeta paper_from_json(const nlohmann::json& j);
NewsArticle article_from_json(const nlohmann::json& j);
ScientificFinding finding_from_json(const nlohmann::json& j);
AnnotationRecord annotation_from_json(const nlohmann::json& j);
// Requires exactly the six aspect keys.
AspectLabels aspects_from_json(const nlohmann::json& j);

}  // namespace certkit::corpus
