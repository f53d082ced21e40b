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

#include <string>
#include <string_view>
#include <vector>

namespace certkit::lexicon {

// Lowercases ASCII letters and splits on every byte that is not an ASCII
// letter or digit. Non-ASCII bytes are separators.
std::vector<std::string> tokenize(std::string_view text);

struct Token {
  std::string text;  // lowercased
  std::size_t begin = 0;
  std::size_t end = 0;  // one past the last byte in the source text
};

// tokenize() with source offsets.
std::vector<Token> tokenize_with_offsets(std::string_view text);

// Whitespace-delimited word count (used for the news length filter).
std::size_t count_words(std::string_view text);

// Lowercase, delete every character that is neither alphanumeric nor
// whitespace, then split on whitespace. "long-term" becomes "longterm".
std::vector<std::string> strip_punctuation_words(std::string_view text);

inline bool is_ascii_alnum(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9');
}
inline bool is_ascii_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}
inline char ascii_lower(char c) {
  return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}
std::string to_lower(std::string_view s);

// Positive vowel-group syllable estimate for an alphabetic word.
int count_syllables(std::string_view word);

}  // namespace certkit::lexicon
