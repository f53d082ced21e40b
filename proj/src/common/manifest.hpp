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

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "json.hpp"

namespace certkit {

// Provenance block embedded at the top of every output file. Contains no
// timestamps so that reruns with identical inputs are byte-identical.
struct Manifest {
  std::string command;
  std::string config_hash;
  std::map<std::string, std::string> lexicon_hashes;
  std::optional<std::uint64_t> seed;

  nlohmann::ordered_json to_json() const;
  // Single-line JSONL header: {"_manifest":{...}}
  std::string jsonl_line() const;
  // CSV comment header: "# manifest: {...}"
  std::string csv_line() const;
};

// True for the {"_manifest":...} header line of a JSONL file.
bool is_manifest_record(const nlohmann::json& j);

}  // namespace certkit
