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

#include "corpus/io.hpp"

#include <set>
#include <sstream>

#include "common/error.hpp"
#include "common/jsonl.hpp"

namespace certkit::corpus {

IngestResult ingest_corpus(const std::filesystem::path& news_path,
                           const std::filesystem::path& papers_path) {
  IngestResult result;
  std::set<std::string> dois;
  auto paper_errors = read_jsonl(papers_path, [&](std::size_t, const nlohmann::json& j) {
    auto p = paper_from_json(j);
    if (!dois.insert(p.doi).second) throw data_error("duplicate doi '" + p.doi + "'");
    result.corpus.papers.push_back(std::move(p));
  });
  for (auto& e : paper_errors) result.errors.push_back({papers_path.string(), e.line, e.message});

  std::set<std::string> ids;
  auto news_errors = read_jsonl(news_path, [&](std::size_t, const nlohmann::json& j) {
    auto a = article_from_json(j);
    if (!ids.insert(a.article_id).second)
      throw data_error("duplicate article_id '" + a.article_id + "'");
    result.corpus.articles.push_back(std::move(a));
  });
  for (auto& e : news_errors) result.errors.push_back({news_path.string(), e.line, e.message});
  return result;
}

namespace {
template <typename Range>
std::string jsonl_body(const Manifest& manifest, const Range& items) {
  std::ostringstream out;
  out << manifest.jsonl_line() << '\n';
  for (const auto& item : items) out << to_json(item).dump() << '\n';
  return out.str();
}
}  // namespace

void write_corpus(const Corpus& corpus, const std::filesystem::path& dir, const Manifest& manifest) {
  std::filesystem::create_directories(dir);
  write_text_file(dir / "papers.jsonl", jsonl_body(manifest, corpus.papers));
  write_text_file(dir / "news.jsonl", jsonl_body(manifest, corpus.articles));
}

IngestResult load_corpus_dir(const std::filesystem::path& dir) {
  return ingest_corpus(dir / "news.jsonl", dir / "papers.jsonl");
}

void write_findings(const std::filesystem::path& path, const std::vector<ScientificFinding>& findings,
                    const Manifest& manifest) {
  write_text_file(path, jsonl_body(manifest, findings));
}

std::vector<ScientificFinding> read_findings(const std::filesystem::path& path) {
  std::vector<ScientificFinding> out;
  auto errors = read_jsonl(path, [&](std::size_t, const nlohmann::json& j) {
    out.push_back(finding_from_json(j));
  });
  if (!errors.empty()) {
    throw data_error(path.string() + ":" + std::to_string(errors.front().line) + ": " +
                     errors.front().message);
  }
  return out;
}

AnnotationSet read_annotations(const std::filesystem::path& path) {
  AnnotationSet set;
  auto errors = read_jsonl(path, [&](std::size_t, const nlohmann::json& j) {
    set.records.push_back(annotation_from_json(j));
  });
  for (auto& e : errors) set.errors.push_back({path.string(), e.line, e.message});
  return set;
}

void write_annotations(const std::filesystem::path& path,
                       const std::vector<AnnotationRecord>& records) {
  std::ostringstream out;
  for (const auto& r : records) out << to_json(r).dump() << '\n';
  write_text_file(path, out.str());
}

}  // namespace certkit::corpus
