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

#include "extraction/sentences.hpp"

#include "lexicon/tokenize.hpp"

namespace certkit::extraction {
namespace {

bool is_upper(char c) { return c >= 'A' && c <= 'Z'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

bool opens_sentence(std::string_view text, std::size_t i) {
  const char c = text[i];
  if (is_upper(c) || is_digit(c) || c == '"' || c == '\'') return true;
  // typographic opening quotes
  return text.substr(i, 3) == "\xE2\x80\x9C" || text.substr(i, 3) == "\xE2\x80\x98";
}

bool guarded(std::string_view text, std::size_t period,
             std::span<const std::string> abbreviations) {
  const std::string_view upto = text.substr(0, period + 1);
  for (const auto& abbr : abbreviations) {
    if (abbr.size() > upto.size()) continue;
    if (upto.substr(upto.size() - abbr.size()) != abbr) continue;
    const std::size_t start = upto.size() - abbr.size();
    if (start == 0 || !lexicon::is_ascii_alnum(text[start - 1])) return true;
  }
  return false;
}

}  // namespace

std::vector<corpus::CharSpan> split_sentences(std::string_view text,
                                              std::span<const std::string> abbreviations) {
  std::vector<corpus::CharSpan> spans;
  if (text.empty()) return spans;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c != '.' && c != '?' && c != '!') continue;
    std::size_t j = i + 1;
    while (j < text.size() && lexicon::is_ascii_space(text[j])) ++j;
    if (j == i + 1 || j >= text.size()) continue;
    if (!opens_sentence(text, j)) continue;
    if (c == '.' && guarded(text, i, abbreviations)) continue;
    spans.push_back({start, j});
    start = j;
    i = j - 1;
  }
  spans.push_back({start, text.size()});
  return spans;
}

corpus::CharSpan trim_span(std::string_view text, corpus::CharSpan span) {
  while (span.start < span.end && lexicon::is_ascii_space(text[span.start])) ++span.start;
  while (span.end > span.start && lexicon::is_ascii_space(text[span.end - 1])) --span.end;
  return span;
}

}  // namespace certkit::extraction
