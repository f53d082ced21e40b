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

#include "common/manifest.hpp"

namespace certkit {

nlohmann::ordered_json Manifest::to_json() const {
  nlohmann::ordered_json j;
  j["tool"] = "certkit";
  j["version"] = CERTKIT_VERSION;
  j["command"] = command;
  j["config_hash"] = config_hash;
  nlohmann::ordered_json lex = nlohmann::ordered_json::object();
  for (const auto& [name, h] : lexicon_hashes) lex[name] = h;
  j["lexicons"] = lex;
  if (seed) {
    j["seed"] = *seed;
  } else {
    j["seed"] = nullptr;
  }
  return j;
}

std::string Manifest::jsonl_line() const {
  nlohmann::ordered_json j;
  j["_manifest"] = to_json();
  return j.dump();
}

std::string Manifest::csv_line() const { return "# manifest: " + to_json().dump(); }

bool is_manifest_record(const nlohmann::json& j) {
  return j.is_object() && j.contains("_manifest");
}

}  // namespace certkit
