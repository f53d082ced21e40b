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

#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "common/manifest.hpp"
#include "corpus/types.hpp"
#include "lexicon/lexicon.hpp"

namespace certkit::matching {

using StemSet = std::set<std::string>;

// Lowercase, delete punctuation, drop stopwords, Porter-stem, deduplicate.
StemSet normalize_for_match(std::string_view text, const lexicon::Lexicon& stopwords);

struct PairStats {
  std::size_t overlap = 0;  // |A n B|
  double jaccard = 0.0;     // |A n B| / |A u B|, 0 for two empty sets
};
PairStats pair_stats(const StemSet& a, const StemSet& b);

struct MatchThresholds {
  std::size_t min_overlap = 3;  // overlap >= min_overlap
  double min_jaccard = 0.3;     // jaccard > min_jaccard
};

struct MatchedPair {
  std::string news_finding_id;
  std::string abstract_finding_id;
  std::size_t overlap = 0;
  double jaccard = 0.0;

  bool operator==(const MatchedPair&) const = default;
};

// All news x abstract pairs clearing both thresholds, reduced to the best
// pair per news finding (max jaccard, then max overlap, then the earliest
// abstract finding). Output follows news order.
std::vector<MatchedPair> match_findings(const std::vector<corpus::ScientificFinding>& news,
                                        const std::vector<corpus::ScientificFinding>& abstracts,
                                        const lexicon::Lexicon& stopwords,
                                        const MatchThresholds& thresholds = {});

// Groups findings by news article and the single paper it covers, then
// matches within each group.
std::vector<MatchedPair> match_corpus(const corpus::Corpus& corpus,
                                      const std::vector<corpus::ScientificFinding>& findings,
                                      const lexicon::Lexicon& stopwords,
                                      const MatchThresholds& thresholds = {});

void write_pairs(const std::filesystem::path& path, const std::vector<MatchedPair>& pairs,
                 const Manifest& manifest);
std::vector<MatchedPair> read_pairs(const std::filesystem::path& path);

}  // namespace certkit::matching
