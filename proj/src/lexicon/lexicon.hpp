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
#include <filesystem>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace certkit::lexicon {

enum class MatchMode { kToken, kPhrase };

// Reads a lexicon file: UTF-8, one entry per line, '#' starts a comment.
// Entries are trimmed; blank lines are skipped.
std::vector<std::string> read_entries(const std::filesystem::path& path);

// An immutable set of lowercase entries. In phrase mode multiword entries
// are matched as token sequences; in token mode only single-token entries
// are consulted.
class Lexicon {
 public:
  Lexicon(std::string name, const std::vector<std::string>& entries, MatchMode mode);

  static Lexicon load(const std::filesystem::path& path, std::string name, MatchMode mode);

  const std::string& name() const { return name_; }
  const std::set<std::string>& entries() const { return entries_; }
  MatchMode mode() const { return mode_; }
  Lexicon with_mode(MatchMode mode) const;

  bool contains(std::string_view token) const;

  // Number of entry occurrences in the token sequence, duplicates included.
  // Phrase mode scans left to right taking the longest entry at each
  // position; matches do not overlap.
  std::size_t count(std::span<const std::string> tokens) const;

  // Length (in tokens) of the longest entry matching at tokens[pos], or 0.
  std::size_t match_at(std::span<const std::string> tokens, std::size_t pos) const;

  // Fingerprint of the sorted entry set, recorded in output manifests.
  std::string content_hash() const;

 private:
  std::string name_;
  std::set<std::string> entries_;
  MatchMode mode_;
  // first token -> token sequences, longest first
  std::unordered_map<std::string, std::vector<std::vector<std::string>>> by_first_;
};

std::size_t count_hedges(std::string_view text, const Lexicon& hedges);

// The lexicons and guard lists the pipeline depends on.
struct Resources {
  Lexicon hedges;
  Lexicon report_verbs;
  Lexicon stopwords;
  std::vector<std::string> abbreviations;
  std::string abbreviations_hash;

  std::map<std::string, std::string> hashes() const;
};

struct ResourcePaths {
  std::filesystem::path hedges;
  std::filesystem::path report_verbs;
  std::filesystem::path stopwords;
  std::filesystem::path abbreviations;

  // $CERTAINTY_LEXICON_DIR if set, else the directory shipped with the build.
  static std::filesystem::path default_dir();
  static ResourcePaths in_dir(const std::filesystem::path& dir);
};

Resources load_resources(const ResourcePaths& paths, MatchMode hedge_mode = MatchMode::kPhrase);

}  // namespace certkit::lexicon
