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

#include <span>
#include <string>
#include <vector>

#include "corpus/types.hpp"
#include "lexicon/lexicon.hpp"

namespace certkit::extraction {

// One finding per abstract sentence labelled result or conclusion, in
// document order. Offsets refer to the abstract text formed by joining the
// sentences with single spaces.
std::vector<corpus::ScientificFinding> extract_abstract_findings(const corpus::PaperMeta& paper);

// For each sentence containing a report-verb phrase, keeps the clause after
// the phrase's final "that" with its first letter capitalised. The earliest
// phrase occurrence in the sentence wins.
std::vector<corpus::ScientificFinding> extract_news_findings(
    const corpus::NewsArticle& article, const lexicon::Lexicon& report_verbs,
    std::span<const std::string> abbreviations);

// Both extraction paths over a whole (preprocessed) corpus. News findings
// are attributed to the article's single linked paper.
std::vector<corpus::ScientificFinding> extract_corpus_findings(
    const corpus::Corpus& corpus, const lexicon::Lexicon& report_verbs,
    std::span<const std::string> abbreviations);

// Uppercases the first ASCII letter unless a digit comes first; the rest is
// untouched.
std::string capitalize_first(std::string text);

}  // namespace certkit::extraction
