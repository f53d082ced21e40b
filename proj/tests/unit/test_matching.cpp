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

#include <cmath>
#include <string>
#include <vector>

#include "common/manifest.hpp"
#include "corpus/types.hpp"
#include "doctest.h"
#include "lexicon/lexicon.hpp"
#include "matching/match.hpp"
#include "test_support.hpp"

using namespace certkit;
using namespace certkit::matching;
using certkit::testing::fixture;
using certkit::testing::read_tsv;

namespace {

const lexicon::Lexicon& stopwords() {
  static const lexicon::Resources r =
      lexicon::load_resources(lexicon::ResourcePaths::in_dir(CERTKIT_DEFAULT_LEXICON_DIR));
  return r.stopwords;
}

corpus::ScientificFinding finding(std::string id, std::string text, corpus::Source src) {
  corpus::ScientificFinding f;
  f.finding_id = std::move(id);
  f.text = std::move(text);
  f.source = src;
  return f;
}

}  // namespace

TEST_SUITE("matching") {
  TEST_CASE("normalisation drops punctuation and stopwords, then stems") {
    const auto s = normalize_for_match("The long-term effects of drinking, and the Effects!",
                                       stopwords());
    CHECK(s == StemSet{"longterm", "effect", "drink"});
  }

  TEST_CASE("pair statistics") {
    const StemSet a{"x", "y", "z"}, b{"y", "z", "w", "v"};
    const auto st = pair_stats(a, b);
    CHECK(st.overlap == 2);
    CHECK(st.jaccard == doctest::Approx(2.0 / 5.0));
    CHECK(pair_stats({}, {}).jaccard == 0.0);
  }

  TEST_CASE("reference matched pairs") {
    const auto rows = read_tsv(fixture("matched_pairs.tsv"));
    REQUIRE(rows.size() == 15);
    std::size_t within = 0;
    for (const auto& row : rows) {
      const auto st = pair_stats(normalize_for_match(row[0], stopwords()),
                                 normalize_for_match(row[1], stopwords()));
      const double jac = std::stod(row[2]);
      const long ov = std::stol(row[3]);
      const bool ok = std::abs(st.jaccard - jac) <= 0.05 + 1e-12 &&
                      std::labs(static_cast<long>(st.overlap) - ov) <= 1;
      if (ok) ++within;
      else MESSAGE("outside tolerance: " << row[0] << " (" << st.jaccard << "/" << st.overlap << ")");
    }
    CHECK(within >= 14);
  }

  TEST_CASE("thresholds are overlap >= 3 and jaccard > 0.3") {
    // Stems a..: sets sharing exactly 3 of 10 give jaccard 0.3, rejected.
    const std::vector<corpus::ScientificFinding> news{
        finding("n0", "alpha bravo charlie delta echo foxtrot golf", corpus::Source::kNews)};
    const std::vector<corpus::ScientificFinding> abs_at{
        finding("a0", "alpha bravo charlie hotel india juliet", corpus::Source::kAbstract)};
    const auto st = pair_stats(normalize_for_match(news[0].text, stopwords()),
                               normalize_for_match(abs_at[0].text, stopwords()));
    REQUIRE(st.overlap == 3);
    REQUIRE(st.jaccard == doctest::Approx(0.3));
    CHECK(match_findings(news, abs_at, stopwords()).empty());
    MatchThresholds loose;
    loose.min_jaccard = 0.29;
    CHECK(match_findings(news, abs_at, stopwords(), loose).size() == 1);
    // Two shared stems is too few however high the jaccard.
    const std::vector<corpus::ScientificFinding> n2{finding("n", "alpha bravo", corpus::Source::kNews)};
    const std::vector<corpus::ScientificFinding> a2{
        finding("a", "alpha bravo", corpus::Source::kAbstract)};
    CHECK(match_findings(n2, a2, stopwords()).empty());
  }

  TEST_CASE("best pair per news finding, ties to the earliest abstract") {
    const std::vector<corpus::ScientificFinding> news{
        finding("n0", "alpha bravo charlie delta", corpus::Source::kNews),
        finding("n1", "zulu yankee xray", corpus::Source::kNews)};
    const std::vector<corpus::ScientificFinding> abstracts{
        finding("a0", "alpha bravo charlie delta echo foxtrot", corpus::Source::kAbstract),
        finding("a1", "alpha bravo charlie delta", corpus::Source::kAbstract),
        finding("a2", "alpha bravo charlie delta", corpus::Source::kAbstract)};
    const auto pairs = match_findings(news, abstracts, stopwords());
    REQUIRE(pairs.size() == 1);
    CHECK(pairs[0].news_finding_id == "n0");
    CHECK(pairs[0].abstract_finding_id == "a1");
    CHECK(pairs[0].overlap == 4);
    CHECK(pairs[0].jaccard == 1.0);
  }

  TEST_CASE("pairs round trip through disk") {
    certkit::testing::TempDir dir;
    const std::vector<MatchedPair> pairs{{"n", "a", 4, 0.5}, {"m", "b", 3, 1.0 / 3.0}};
    write_pairs(dir / "p.jsonl", pairs, Manifest{});
    CHECK(read_pairs(dir / "p.jsonl") == pairs);
  }

  TEST_CASE("matching examples") {
    const std::string s = "Coffee drinkers showed lower rates of heart disease.";
    const std::vector<corpus::ScientificFinding> news{finding("n", s, corpus::Source::kNews)};
    const std::vector<corpus::ScientificFinding> same{finding("a", s, corpus::Source::kAbstract)};
    const auto pairs = match_findings(news, same, stopwords());
    REQUIRE(pairs.size() == 1);
    CHECK(pairs[0].jaccard == 1.0);
    const std::vector<corpus::ScientificFinding> other{
        finding("b", "Glaciers retreated quickly during warm summers.", corpus::Source::kAbstract)};
    CHECK(match_findings(news, other, stopwords()).empty());
  }

  TEST_CASE("normalisation is idempotent") {
    for (const char* t : {"The long-term effects of drinking, and the Effects!",
                          "Mice given the drug slept longer than controls.", ""}) {
      const auto once = normalize_for_match(t, stopwords());
      std::string joined;
      for (const auto& w : once) joined += w + " ";
      CHECK(normalize_for_match(joined, stopwords()) == once);
    }
  }
}
