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

#include "matching/match.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "common/error.hpp"
#include "common/jsonl.hpp"
#include "lexicon/porter.hpp"
#include "lexicon/tokenize.hpp"

namespace certkit::matching {

StemSet normalize_for_match(std::string_view text, const lexicon::Lexicon& stopwords) {
  StemSet stems;
  for (const auto& w : lexicon::strip_punctuation_words(text)) {
    if (stopwords.contains(w)) continue;
    stems.insert(lexicon::porter_stem(w));
  }
  return stems;
}

PairStats pair_stats(const StemSet& a, const StemSet& b) {
  std::size_t inter = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia == *ib) {
      ++inter;
      ++ia;
      ++ib;
    } else if (*ia < *ib) {
      ++ia;
    } else {
      ++ib;
    }
  }
  const std::size_t uni = a.size() + b.size() - inter;
  return {inter, uni == 0 ? 0.0 : static_cast<double>(inter) / static_cast<double>(uni)};
}

std::vector<MatchedPair> match_findings(const std::vector<corpus::ScientificFinding>& news,
                                        const std::vector<corpus::ScientificFinding>& abstracts,
                                        const lexicon::Lexicon& stopwords,
                                        const MatchThresholds& thresholds) {
  std::vector<StemSet> abstract_stems;
  abstract_stems.reserve(abstracts.size());
  for (const auto& a : abstracts) abstract_stems.push_back(normalize_for_match(a.text, stopwords));

  std::vector<MatchedPair> out;
  for (const auto& n : news) {
    const auto stems = normalize_for_match(n.text, stopwords);
    std::size_t best = abstracts.size();
    PairStats best_stats;
    for (std::size_t i = 0; i < abstracts.size(); ++i) {
      const auto s = pair_stats(stems, abstract_stems[i]);
      if (s.overlap < thresholds.min_overlap || !(s.jaccard > thresholds.min_jaccard)) continue;
      if (best == abstracts.size() || s.jaccard > best_stats.jaccard ||
          (s.jaccard == best_stats.jaccard && s.overlap > best_stats.overlap)) {
        best = i;
        best_stats = s;
      }
    }
    if (best < abstracts.size())
      out.push_back({n.finding_id, abstracts[best].finding_id, best_stats.overlap, best_stats.jaccard});
  }
  return out;
}

std::vector<MatchedPair> match_corpus(const corpus::Corpus& corpus,
                                      const std::vector<corpus::ScientificFinding>& findings,
                                      const lexicon::Lexicon& stopwords,
                                      const MatchThresholds& thresholds) {
  std::map<std::string, std::vector<corpus::ScientificFinding>> abstracts_by_doi;
  std::map<std::string, std::vector<corpus::ScientificFinding>> news_by_article;
  for (const auto& f : findings) {
    if (f.source == corpus::Source::kAbstract) {
      abstracts_by_doi[f.origin_doi].push_back(f);
    } else if (f.origin_article_id) {
      news_by_article[*f.origin_article_id].push_back(f);
    }
  }
  std::vector<MatchedPair> out;
  for (const auto& article : corpus.articles) {
    if (article.linked_dois.size() != 1) continue;
    auto n = news_by_article.find(article.article_id);
    auto a = abstracts_by_doi.find(article.linked_dois.front());
    if (n == news_by_article.end() || a == abstracts_by_doi.end()) continue;
    auto pairs = match_findings(n->second, a->second, stopwords, thresholds);
    out.insert(out.end(), pairs.begin(), pairs.end());
  }
  return out;
}

void write_pairs(const std::filesystem::path& path, const std::vector<MatchedPair>& pairs,
                 const Manifest& manifest) {
  std::ostringstream out;
  out << manifest.jsonl_line() << '\n';
  for (const auto& p : pairs) {
    nlohmann::ordered_json j;
    j["news_finding_id"] = p.news_finding_id;
    j["abstract_finding_id"] = p.abstract_finding_id;
    j["overlap"] = p.overlap;
    j["jaccard"] = p.jaccard;
    out << j.dump() << '\n';
  }
  write_text_file(path, out.str());
}

std::vector<MatchedPair> read_pairs(const std::filesystem::path& path) {
  std::vector<MatchedPair> out;
  auto errors = read_jsonl(path, [&](std::size_t, const nlohmann::json& j) {
    MatchedPair p;
    p.news_finding_id = j.at("news_finding_id").get<std::string>();
    p.abstract_finding_id = j.at("abstract_finding_id").get<std::string>();
    p.overlap = j.at("overlap").get<std::size_t>();
    p.jaccard = j.at("jaccard").get<double>();
    out.push_back(std::move(p));
  });
  if (!errors.empty())
    throw data_error(path.string() + ":" + std::to_string(errors.front().line) + ": " +
                     errors.front().message);
  return out;
}

}  // namespace certkit::matching
