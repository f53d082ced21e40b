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

#include <filesystem>
#include <string>
#include <vector>

#include "common/manifest.hpp"
#include "corpus/types.hpp"

namespace certkit::corpus {

struct IngestError {
  std::string file;
  std::size_t line = 0;
  std::string message;
};

struct IngestResult {
  Corpus corpus;
  std::vector<IngestError> errors;
};

// Reads papers.jsonl and news.jsonl. Unreadable files throw; malformed
// lines (and duplicate DOIs) are reported with their line numbers.
IngestResult ingest_corpus(const std::filesystem::path& news_path,
                           const std::filesystem::path& papers_path);

// Writes <dir>/papers.jsonl and <dir>/news.jsonl.
void write_corpus(const Corpus& corpus, const std::filesystem::path& dir, const Manifest& manifest);
IngestResult load_corpus_dir(const std::filesystem::path& dir);

void write_findings(const std::filesystem::path& path, const std::vector<ScientificFinding>& findings,
                    const Manifest& manifest);
// Derived files are expected to be clean: the first malformed line throws.
std::vector<ScientificFinding> read_findings(const std::filesystem::path& path);

struct AnnotationSet {
  std::vector<AnnotationRecord> records;
  std::vector<IngestError> errors;
};
AnnotationSet read_annotations(const std::filesystem::path& path);
void write_annotations(const std::filesystem::path& path,
                       const std::vector<AnnotationRecord>& records);

}  // namespace certkit::corpus
