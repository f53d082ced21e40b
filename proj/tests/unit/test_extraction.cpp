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
#include <vector>

#include "common/rng.hpp"
#include "corpus/types.hpp"
#include "doctest.h"
#include "extraction/findings.hpp"
#include "extraction/sentences.hpp"
#include "lexicon/lexicon.hpp"
#include "lexicon/tokenize.hpp"
#include "test_support.hpp"

using namespace certkit;
using namespace certkit::extraction;
using certkit::testing::fixture;
using certkit::testing::read_tsv;

namespace {

const lexicon::Resources& shipped() {
  static const lexicon::Resources r =
      lexicon::load_resources(lexicon::ResourcePaths::in_dir(CERTKIT_DEFAULT_LEXICON_DIR));
  return r;
}

std::vector<std::string> sentences(std::string_view text) {
  std::vector<std::string> out;
  for (const auto& span : split_sentences(text, shipped().abbreviations)) {
    const auto t = trim_span(text, span);
    out.emplace_back(text.substr(t.start, t.end - t.start));
  }
  return out;
}

corpus::NewsArticle news(std::string body) {
  corpus::NewsArticle a;
  a.article_id = "n1";
  a.outlet = "o";
  a.body = std::move(body);
  a.linked_dois = {"10.1/x"};
  return a;
}

}  // namespace

TEST_SUITE("extraction") {
  TEST_CASE("splitter basics") {
    CHECK(sentences("One. Two? Three! four.") ==
          std::vector<std::string>{"One.", "Two?", "Three! four."});
    CHECK(sentences("It rose 3. 5 people left.") ==
          std::vector<std::string>{"It rose 3.", "5 people left."});
    CHECK(sentences("He said. \"Yes.\"") == std::vector<std::string>{"He said.", "\"Yes.\""});
    CHECK(sentences("Value was 3.5 overall. Done.") ==
          std::vector<std::string>{"Value was 3.5 overall.", "Done."});
  }

  TEST_CASE("abbreviations never split") {
    CHECK(sentences("Dr. Smith and Smith et al. Found it. Next.") ==
          std::vector<std::string>{"Dr. Smith and Smith et al. Found it.", "Next."});
  }

  TEST_CASE("spans are contiguous and cover the input") {
    const std::string text = "  Lead. Mid sentence here?  Last one!  ";
    const auto spans = split_sentences(text, shipped().abbreviations);
    REQUIRE(!spans.empty());
    CHECK(spans.front().start == 0);
    CHECK(spans.back().end == text.size());
    for (std::size_t i = 1; i < spans.size(); ++i) CHECK(spans[i].start == spans[i - 1].end);
  }

  TEST_CASE("capitalize_first touches only the first ASCII letter") {
    CHECK(capitalize_first("the ADHD link") == "The ADHD link");
    CHECK(capitalize_first("10% rise") == "10% rise");
    CHECK(capitalize_first("\"quoted\" start") == "\"Quoted\" start");
    CHECK(capitalize_first("") == "");
  }

  TEST_CASE("news extraction keeps the clause after the report verb") {
    const auto a = news(
        "Intro line without verbs. The team found that coffee helps. "
        "They argued that tea works too. Nothing here.");
    const auto fs = extract_news_findings(a, shipped().report_verbs, shipped().abbreviations);
    REQUIRE(fs.size() == 2);
    CHECK(fs[0].text == "Coffee helps.");
    CHECK(fs[0].source == corpus::Source::kNews);
    CHECK(fs[0].origin_doi == "10.1/x");
    CHECK(fs[0].origin_article_id == std::optional<std::string>("n1"));
    CHECK(fs[0].extraction_keyword == std::optional<std::string>("found"));
    CHECK(a.body.substr(fs[0].char_span.start, fs[0].char_span.end - fs[0].char_span.start) ==
          "coffee helps.");
    CHECK(fs[1].text == "Tea works too.");
  }

  TEST_CASE("earliest report verb wins") {
    const auto a = news("Scientists found that results show that mice sleep.");
    const auto fs = extract_news_findings(a, shipped().report_verbs, shipped().abbreviations);
    REQUIRE(fs.size() == 1);
    CHECK(fs[0].extraction_keyword == std::optional<std::string>("found"));
    CHECK(fs[0].text == "Results show that mice sleep.");
  }

  TEST_CASE("abstract extraction takes result and conclusion sentences") {
    corpus::PaperMeta p;
    p.doi = "10.1/x";
    p.abstract_sentences = {{"Background here.", corpus::Role::kBackground},
                            {"We did things.", corpus::Role::kMethod},
                            {"It worked.", corpus::Role::kResult},
                            {"So it matters.", corpus::Role::kConclusion}};
    const auto fs = extract_abstract_findings(p);
    REQUIRE(fs.size() == 2);
    CHECK(fs[0].text == "It worked.");
    CHECK(fs[1].text == "So it matters.");
    CHECK(fs[0].source == corpus::Source::kAbstract);
    CHECK(fs[0].finding_id != fs[1].finding_id);
    const std::string joined = "Background here. We did things. It worked. So it matters.";
    CHECK(joined.substr(fs[1].char_span.start, fs[1].char_span.end - fs[1].char_span.start) ==
          "So it matters.");
  }

  TEST_CASE("reference extraction examples") {
    const auto rows = read_tsv(fixture("extracted_findings.tsv"));
    REQUIRE(rows.size() == 10);
    for (const auto& row : rows) {
      REQUIRE(row.size() >= 3);
      CAPTURE(row[1]);
      std::vector<corpus::ScientificFinding> fs;
      if (row[0] == "news") {
        fs = extract_news_findings(news(row[1]), shipped().report_verbs, shipped().abbreviations);
      } else {
        corpus::PaperMeta p;
        p.doi = "10.1/x";
        p.abstract_sentences = {{"Some background.", corpus::Role::kBackground},
                                {row[1], corpus::Role::kResult}};
        fs = extract_abstract_findings(p);
      }
      REQUIRE(fs.size() == 1);
      CHECK(lexicon::to_lower(fs[0].text) == lexicon::to_lower(row[2]));
      if (row[0] == "news") CHECK(fs[0].extraction_keyword == std::optional<std::string>(row[3]));
    }
  }

  TEST_CASE("splitter examples") {
    CHECK(sentences("A. B.") == std::vector<std::string>{"A.", "B."});
    CHECK(sentences("Dr. Smith found that X helps.") ==
          std::vector<std::string>{"Dr. Smith found that X helps."});
  }

  TEST_CASE("span concatenation reproduces random text slices") {
    const std::string text =
        "Dr. Lee et al. reported 3.5 units. \"Quoted!\" It rose 12%. Mr. Kay asked why? "
        "No. Yes!  Trailing   space. e.g. lower case follows. 42 is a number.";
    Rng rng(3);
    for (int rep = 0; rep < 300; ++rep) {
      const auto a = rng.below(text.size());
      const auto b = a + rng.below(text.size() - a + 1);
      const std::string_view slice(text.data() + a, b - a);
      std::string joined;
      std::size_t prev = 0;
      for (const auto& s : split_sentences(slice, shipped().abbreviations)) {
        CHECK(s.start == prev);
        joined.append(slice.substr(s.start, s.end - s.start));
        prev = s.end;
      }
      CHECK(joined == slice);
    }
  }

  TEST_CASE("abstract role filtering") {
    corpus::PaperMeta p;
    p.doi = "d";
    p.abstract_sentences = {{"One.", corpus::Role::kBackground}, {"Two.", corpus::Role::kBackground}};
    CHECK(extract_abstract_findings(p).empty());
    p.abstract_sentences = {{"R1.", corpus::Role::kResult},
                            {"M.", corpus::Role::kMethod},
                            {"C.", corpus::Role::kConclusion},
                            {"R2.", corpus::Role::kResult}};
    const auto fs = extract_abstract_findings(p);
    REQUIRE(fs.size() == 3);
    CHECK(fs[0].text == "R1.");
    CHECK(fs[1].text == "C.");
    CHECK(fs[2].text == "R2.");
  }

  TEST_CASE("no report verb means no finding") {
    CHECK(extract_news_findings(news("The weather was nice today."), shipped().report_verbs,
                                shipped().abbreviations)
              .empty());
  }
}
