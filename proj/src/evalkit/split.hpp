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
#include <filesystem>
#include <set>
#include <string>
#include <vector>

namespace certkit::evalkit {

struct SplitSpec {
  std::uint64_t seed = 0;
  std::vector<std::string> train;
  std::vector<std::string> val;
  std::vector<std::string> test;
  std::vector<std::string> random_test;  // naturally sampled items, test-only

  // test followed by random_test, without duplicates.
  std::vector<std::string> evaluation_ids() const;
  bool operator==(const SplitSpec&) const = default;
};

// Shuffles the (deduplicated, sorted) ids with `seed` and cuts them 8:1:1.
// `random_ids` are removed from the pool and become random_test.
SplitSpec make_split(std::vector<std::string> ids, std::vector<std::string> random_ids,
                     std::uint64_t seed);

void write_split(const std::filesystem::path& path, const SplitSpec& split);
SplitSpec read_split(const std::filesystem::path& path);

}  // namespace certkit::evalkit
