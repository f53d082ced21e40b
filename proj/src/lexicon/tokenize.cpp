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

#include "lexicon/tokenize.hpp"

namespace certkit::lexicon {

std::string to_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = ascii_lower(c);
  return out;
}

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::string cur;
  for (char c : text) {
    if (is_ascii_alnum(c)) {
      cur.push_back(ascii_lower(c));
    } else if (!cur.empty()) {
      tokens.push_back(std::move(cur));
      cur.clear();
    }
  }
  if (!cur.empty()) tokens.push_back(std::move(cur));
  return tokens;
}

std::vector<Token> tokenize_with_offsets(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    if (!is_ascii_alnum(text[i])) {
      ++i;
      continue;
    }
    Token t;
    t.begin = i;
    while (i < text.size() && is_ascii_alnum(text[i])) t.text.push_back(ascii_lower(text[i++]));
    t.end = i;
    tokens.push_back(std::move(t));
  }
  return tokens;
}

std::size_t count_words(std::string_view text) {
  std::size_t n = 0;
  bool in_word = false;
  for (char c : text) {
    if (is_ascii_space(c)) {
      in_word = false;
    } else if (!in_word) {
      in_word = true;
      ++n;
    }
  }
  return n;
}

std::vector<std::string> strip_punctuation_words(std::string_view text) {
  std::vector<std::string> words;
  std::string cur;
  for (char c : text) {
    if (is_ascii_space(c)) {
      if (!cur.empty()) {
        words.push_back(std::move(cur));
        cur.clear();
      }
    } else if (is_ascii_alnum(c)) {
      cur.push_back(ascii_lower(c));
    }
  }
  if (!cur.empty()) words.push_back(std::move(cur));
  return words;
}

namespace {
bool is_vowel(char c) {
  c = ascii_lower(c);
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u' || c == 'y';
}
}  // namespace

// Counts maximal vowel runs. A trailing "e" is treated as silent only in the
// vowel-consonant-e pattern ("rate", "hope"), so "science" and "table" keep it.
int count_syllables(std::string_view word) {
  int runs = 0;
  bool prev_vowel = false;
  for (char c : word) {
    const bool v = is_vowel(c);
    if (v && !prev_vowel) ++runs;
    prev_vowel = v;
  }
  const std::size_t n = word.size();
  if (runs > 1 && n >= 3 && ascii_lower(word[n - 1]) == 'e' && !is_vowel(word[n - 2]) &&
      is_vowel(word[n - 3])) {
    --runs;
  }
  return runs < 1 ? 1 : runs;
}

}  // namespace certkit::lexicon
