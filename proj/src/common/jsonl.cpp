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

#include "common/jsonl.hpp"

#include <fstream>
#include <sstream>

#include "common/error.hpp"
#include "common/manifest.hpp"

namespace certkit {

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw io_error("cannot write " + path.string());
  out << content;
  if (!out) throw io_error("write failed for " + path.string());
}

std::vector<LineError> read_jsonl(
    const std::filesystem::path& path,
    const std::function<void(std::size_t, const nlohmann::json&)>& on_record) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("cannot read " + path.string());
  std::vector<LineError> errors;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      errors.push_back({line_no, std::string("invalid JSON: ") + e.what()});
      continue;
    }
    if (is_manifest_record(j)) continue;
    try {
      on_record(line_no, j);
    } catch (const nlohmann::json::exception& e) {
      errors.push_back({line_no, e.what()});
    } catch (const Error& e) {
      errors.push_back({line_no, e.what()});
    }
  }
  return errors;
}

}  // namespace certkit
