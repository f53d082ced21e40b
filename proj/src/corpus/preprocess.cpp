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

#include "corpus/preprocess.hpp"

#include <vector>

#include "lexicon/tokenize.hpp"

namespace certkit::corpus {
namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  return lines;
}

bool is_blank(std::string_view line) {
  for (char c : line)
    if (!lexicon::is_ascii_space(c)) return false;
  return true;
}

bool starts_reference_heading(std::string_view line) {
  std::size_t i = 0;
  while (i < line.size() && lexicon::is_ascii_space(line[i])) ++i;
  for (std::string_view word : {std::string_view("references"), std::string_view("sources")}) {
    if (line.size() - i < word.size()) continue;
    bool eq = true;
    for (std::size_t k = 0; k < word.size(); ++k) {
      if (lexicon::ascii_lower(line[i + k]) != word[k]) {
        eq = false;
        break;
      }
    }
    if (!eq) continue;
    const std::size_t after = i + word.size();
    if (after == line.size() || !lexicon::is_ascii_alnum(line[after])) return true;
  }
  return false;
}

bool has_quote(std::string_view paragraph) {
  return paragraph.find('"') != std::string_view::npos ||
         paragraph.find("\xE2\x80\x9C") != std::string_view::npos ||  // left double quote
         paragraph.find("\xE2\x80\x9D") != std::string_view::npos;    // right double quote
}

}  // namespace

StrippedBody strip_body(std::string_view body) {
  StrippedBody out;
  auto lines = split_lines(body);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (starts_reference_heading(lines[i])) {
      lines.resize(i);
      out.reference_section = true;
      break;
    }
  }

  std::vector<std::string> kept;
  std::string current;
  bool in_paragraph = false;
  auto flush = [&] {
    if (!in_paragraph) return;
    if (has_quote(current)) {
      ++out.quote_paragraphs;
    } else {
      kept.push_back(std::move(current));
    }
    current.clear();
    in_paragraph = false;
  };
  for (auto line : lines) {
    if (is_blank(line)) {
      flush();
      continue;
    }
    if (in_paragraph) current.push_back('\n');
    current.append(line);
    in_paragraph = true;
  }
  flush();

  if (out.quote_paragraphs == 0 && !out.reference_section) {
    out.body = std::string(body);
    return out;
  }
  for (std::size_t i = 0; i < kept.size(); ++i) {
    if (i > 0) out.body += "\n\n";
    out.body += kept[i];
  }
  return out;
}

PreprocessResult preprocess_news(const Corpus& corpus, std::size_t length_cutoff) {
  PreprocessResult result;
  result.corpus.papers = corpus.papers;
  auto& report = result.report;
  report.input_articles = corpus.articles.size();
  for (const auto& article : corpus.articles) {
    if (article.word_count > length_cutoff) {
      ++report.removed_too_long;
      continue;
    }
    if (article.linked_dois.size() != 1) {
      ++report.removed_link_count;
      continue;
    }
    NewsArticle cleaned = article;
    auto stripped = strip_body(article.body);
    report.quote_paragraphs_stripped += stripped.quote_paragraphs;
    report.reference_sections_stripped += stripped.reference_section ? 1 : 0;
    cleaned.body = std::move(stripped.body);
    cleaned.word_count = lexicon::count_words(cleaned.body);
    result.corpus.articles.push_back(std::move(cleaned));
  }
  report.kept_articles = result.corpus.articles.size();
  return result;
}

}  // namespace certkit::corpus
