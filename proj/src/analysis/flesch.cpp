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

#include "analysis/flesch.hpp"

#include "common/error.hpp"
#include "extraction/sentences.hpp"
#include "lexicon/tokenize.hpp"

namespace certkit::analysis {

ReadabilityCounts readability_counts(std::string_view text,
                                     std::span<const std::string> abbreviations) {
  ReadabilityCounts c;
  for (const auto& span : extraction::split_sentences(text, abbreviations)) {
    const auto t = extraction::trim_span(text, span);
    if (t.end > t.start) ++c.sentences;
  }
  for (const auto& w : lexicon::strip_punctuation_words(text)) {
    ++c.words;
    c.syllables += static_cast<std::size_t>(lexicon::count_syllables(w));
  }
  return c;
}

double flesch_from_counts(const ReadabilityCounts& c) {
  if (c.words == 0 || c.sentences == 0) throw data_error("flesch: text has no words");
  const double wps = static_cast<double>(c.words) / static_cast<double>(c.sentences);
  const double spw = static_cast<double>(c.syllables) / static_cast<double>(c.words);
  return 206.835 - 1.015 * wps - 84.6 * spw;
}

double flesch_reading_ease(std::string_view text, std::span<const std::string> abbreviations) {
  return flesch_from_counts(readability_counts(text, abbreviations));
}

}  // namespace certkit::analysis
