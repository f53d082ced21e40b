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

#include <cstddef>
#include <string>
#include <string_view>

#include "corpus/types.hpp"

namespace certkit::corpus {

inline constexpr std::size_t kDefaultLengthCutoff = 1392;

struct PreprocessReport {
  std::size_t input_articles = 0;
  std::size_t removed_too_long = 0;
  std::size_t removed_link_count = 0;  // linked to zero or several papers
  std::size_t quote_paragraphs_stripped = 0;
  std::size_t reference_sections_stripped = 0;
  std::size_t kept_articles = 0;
};

struct PreprocessResult {
  Corpus corpus;
  PreprocessReport report;
};

// Drops articles longer than `length_cutoff` words or not linked to exactly
// one paper, then strips quoted paragraphs and trailing reference sections
// from the survivors. Papers pass through untouched. Idempotent.
PreprocessResult preprocess_news(const Corpus& corpus,
                                 std::size_t length_cutoff = kDefaultLengthCutoff);

struct StrippedBody {
  std::string body;
  std::size_t quote_paragraphs = 0;
  bool reference_section = false;
};

// A paragraph is a maximal run of non-blank lines. A paragraph containing a
// double quote (ASCII or typographic) is removed. The reference section
// starts at the first line beginning with "References" or "Sources"
// (case-insensitive, whole word) and runs to the end.
StrippedBody strip_body(std::string_view body);

}  // namespace certkit::corpus
