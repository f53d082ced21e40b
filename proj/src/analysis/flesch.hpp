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
#include <string_view>

namespace certkit::analysis {

struct ReadabilityCounts {
  std::size_t words = 0;
  std::size_t sentences = 0;
  std::size_t syllables = 0;
};

ReadabilityCounts readability_counts(std::string_view text,
                                     std::span<const std::string> abbreviations);

// 206.835 - 1.015 * words/sentences - 84.6 * syllables/words
double flesch_from_counts(const ReadabilityCounts& counts);

// Throws kData when the text has no words.
double flesch_reading_ease(std::string_view text, std::span<const std::string> abbreviations);

}  // namespace certkit::analysis
