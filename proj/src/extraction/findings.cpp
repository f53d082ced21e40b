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

#include "extraction/findings.hpp"

#include "extraction/sentences.hpp"
#include "lexicon/tokenize.hpp"

namespace certkit::extraction {

using corpus::ScientificFinding;

std::string capitalize_first(std::string text) {
  for (char& c : text) {
    if (c >= 'a' && c <= 'z') {
      c = static_cast<char>(c - 'a' + 'A');
      break;
    }
    if ((c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9')) break;
  }
  return text;
}

std::vector<ScientificFinding> extract_abstract_findings(const corpus::PaperMeta& paper) {
  std::vector<ScientificFinding> out;
  std::size_t offset = 0;
  for (std::size_t i = 0; i < paper.abstract_sentences.size(); ++i) {
    const auto& s = paper.abstract_sentences[i];
    const std::size_t begin = offset;
    offset += s.text.size() + 1;
    if (s.role != corpus::Role::kResult && s.role != corpus::Role::kConclusion) continue;
    if (s.text.empty()) continue;
    ScientificFinding f;
    f.finding_id = paper.doi + ":a" + std::to_string(i);
    f.text = s.text;
    f.source = corpus::Source::kAbstract;
    f.origin_doi = paper.doi;
    f.char_span = {begin, begin + s.text.size()};
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<ScientificFinding> extract_news_findings(const corpus::NewsArticle& article,
                                                     const lexicon::Lexicon& report_verbs,
                                                     std::span<const std::string> abbreviations) {
  std::vector<ScientificFinding> out;
  const std::string_view body = article.body;
  const auto spans = split_sentences(body, abbreviations);
  for (std::size_t si = 0; si < spans.size(); ++si) {
    const auto sentence = trim_span(body, spans[si]);
    if (sentence.start == sentence.end) continue;
    const auto tokens = lexicon::tokenize_with_offsets(
        body.substr(sentence.start, sentence.end - sentence.start));
    std::vector<std::string> words;
    words.reserve(tokens.size());
    for (const auto& t : tokens) words.push_back(t.text);

    for (std::size_t pos = 0; pos < words.size(); ++pos) {
      const std::size_t len = report_verbs.match_at(words, pos);
      if (len == 0) continue;
      const auto& last = tokens[pos + len - 1];
      if (last.text != "that" || len < 2) break;
      auto clause = trim_span(body, {sentence.start + last.end, sentence.end});
      std::string text(body.substr(clause.start, clause.end - clause.start));
      bool has_alnum = false;
      for (char c : text) has_alnum = has_alnum || lexicon::is_ascii_alnum(c);
      if (!has_alnum) break;

      std::string keyword;
      for (std::size_t k = pos; k + 1 < pos + len; ++k) {
        if (!keyword.empty()) keyword += ' ';
        keyword += words[k];
      }
      ScientificFinding f;
      f.finding_id = article.article_id + ":s" + std::to_string(si);
      f.text = capitalize_first(std::move(text));
      f.source = corpus::Source::kNews;
      f.origin_doi = article.linked_dois.size() == 1 ? article.linked_dois.front() : "";
      f.origin_article_id = article.article_id;
      f.extraction_keyword = std::move(keyword);
      f.char_span = clause;
      out.push_back(std::move(f));
      break;
    }
  }
  return out;
}

std::vector<ScientificFinding> extract_corpus_findings(const corpus::Corpus& corpus,
                                                       const lexicon::Lexicon& report_verbs,
                                                       std::span<const std::string> abbreviations) {
  std::vector<ScientificFinding> out;
  for (const auto& paper : corpus.papers) {
    auto fs = extract_abstract_findings(paper);
    out.insert(out.end(), std::make_move_iterator(fs.begin()), std::make_move_iterator(fs.end()));
  }
  for (const auto& article : corpus.articles) {
    auto fs = extract_news_findings(article, report_verbs, abbreviations);
    out.insert(out.end(), std::make_move_iterator(fs.begin()), std::make_move_iterator(fs.end()));
  }
  return out;
}

}  // namespace certkit::extraction
