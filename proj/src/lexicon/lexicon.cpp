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

#include "lexicon/lexicon.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>

#include "common/error.hpp"
#include "common/hash.hpp"
#include "lexicon/tokenize.hpp"

namespace certkit::lexicon {

std::vector<std::string> read_entries(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot read lexicon " + path.string());
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    const auto e = line.find_last_not_of(" \t\r");
    out.push_back(line.substr(b, e - b + 1));
  }
  return out;
}

Lexicon::Lexicon(std::string name, const std::vector<std::string>& entries, MatchMode mode)
    : name_(std::move(name)), mode_(mode) {
  for (const auto& e : entries) {
    auto lowered = to_lower(e);
    if (tokenize(lowered).empty()) continue;
    entries_.insert(std::move(lowered));
  }
  if (entries_.empty()) throw data_error("lexicon '" + name_ + "' has no entries");
  for (const auto& e : entries_) {
    auto toks = tokenize(e);
    if (mode_ == MatchMode::kToken && toks.size() != 1) continue;
    by_first_[toks.front()].push_back(std::move(toks));
  }
  for (auto& [first, seqs] : by_first_) {
    std::stable_sort(seqs.begin(), seqs.end(),
                     [](const auto& a, const auto& b) { return a.size() > b.size(); });
  }
}

Lexicon Lexicon::load(const std::filesystem::path& path, std::string name, MatchMode mode) {
  return Lexicon(std::move(name), read_entries(path), mode);
}

Lexicon Lexicon::with_mode(MatchMode mode) const {
  return Lexicon(name_, std::vector<std::string>(entries_.begin(), entries_.end()), mode);
}

bool Lexicon::contains(std::string_view token) const {
  return entries_.find(std::string(token)) != entries_.end();
}

std::size_t Lexicon::match_at(std::span<const std::string> tokens, std::size_t pos) const {
  auto it = by_first_.find(tokens[pos]);
  if (it == by_first_.end()) return 0;
  for (const auto& seq : it->second) {
    if (pos + seq.size() > tokens.size()) continue;
    if (std::equal(seq.begin(), seq.end(), tokens.begin() + static_cast<std::ptrdiff_t>(pos)))
      return seq.size();
  }
  return 0;
}

std::size_t Lexicon::count(std::span<const std::string> tokens) const {
  std::size_t n = 0;
  std::size_t i = 0;
  while (i < tokens.size()) {
    const std::size_t len = match_at(tokens, i);
    if (len > 0) {
      ++n;
      i += len;
    } else {
      ++i;
    }
  }
  return n;
}

std::string Lexicon::content_hash() const {
  std::uint64_t h = fnv1a64("");
  for (const auto& e : entries_) {
    h = fnv1a64(e, h);
    h = fnv1a64("\n", h);
  }
  return hex64(h);
}

std::size_t count_hedges(std::string_view text, const Lexicon& hedges) {
  const auto tokens = tokenize(text);
  return hedges.count(tokens);
}

std::map<std::string, std::string> Resources::hashes() const {
  return {{"hedges", hedges.content_hash()},
          {"report_verbs", report_verbs.content_hash()},
          {"stopwords", stopwords.content_hash()},
          {"abbreviations", abbreviations_hash}};
}

std::filesystem::path ResourcePaths::default_dir() {
  if (const char* env = std::getenv("CERTAINTY_LEXICON_DIR"); env && *env) return env;
  return CERTKIT_DEFAULT_LEXICON_DIR;
}

ResourcePaths ResourcePaths::in_dir(const std::filesystem::path& dir) {
  return {dir / "hedges.txt", dir / "report_verbs.txt", dir / "stopwords.txt",
          dir / "abbreviations.txt"};
}

Resources load_resources(const ResourcePaths& paths, MatchMode hedge_mode) {
  auto abbreviations = read_entries(paths.abbreviations);
  std::uint64_t h = fnv1a64("");
  for (const auto& a : abbreviations) {
    h = fnv1a64(a, h);
    h = fnv1a64("\n", h);
  }
  return Resources{
      Lexicon::load(paths.hedges, "hedges", hedge_mode),
      Lexicon::load(paths.report_verbs, "report_verbs", MatchMode::kPhrase),
      Lexicon::load(paths.stopwords, "stopwords", MatchMode::kToken),
      std::move(abbreviations),
      hex64(h),
  };
}

}  // namespace certkit::lexicon
