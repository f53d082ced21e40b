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
#include <functional>
#include <string>
#include <vector>

#include "json.hpp"

namespace certkit {

struct LineError {
  std::size_t line = 0;
  std::string message;
};

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& content);

// Calls `on_record` for each JSON object line. Blank lines and manifest
// headers are skipped. Lines that fail to parse, or for which `on_record`
// throws, are collected rather than aborting the read.
std::vector<LineError> read_jsonl(
    const std::filesystem::path& path,
    const std::function<void(std::size_t line, const nlohmann::json&)>& on_record);

}  // namespace certkit
