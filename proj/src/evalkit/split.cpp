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

#include "evalkit/split.hpp"

#include <algorithm>
#include <cmath>

#include "common/error.hpp"
#include "common/jsonl.hpp"
#include "common/rng.hpp"
#include "json.hpp"

namespace certkit::evalkit {

std::vector<std::string> SplitSpec::evaluation_ids() const {
  std::vector<std::string> ids = test;
  std::set<std::string> seen(test.begin(), test.end());
  for (const auto& id : random_test)
    if (seen.insert(id).second) ids.push_back(id);
  return ids;
}

SplitSpec make_split(std::vector<std::string> ids, std::vector<std::string> random_ids,
                     std::uint64_t seed) {
  std::sort(random_ids.begin(), random_ids.end());
  random_ids.erase(std::unique(random_ids.begin(), random_ids.end()), random_ids.end());
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  std::vector<std::string> pool;
  std::set_difference(ids.begin(), ids.end(), random_ids.begin(), random_ids.end(),
                      std::back_inserter(pool));

  Rng rng(seed);
  rng.shuffle(std::span(pool));
  const std::size_t n = pool.size();
  const auto n_train = static_cast<std::size_t>(std::llround(0.8 * static_cast<double>(n)));
  const auto n_val = std::min(n - n_train, static_cast<std::size_t>(std::llround(0.1 * static_cast<double>(n))));

  SplitSpec s;
  s.seed = seed;
  s.train.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(n_train));
  s.val.assign(pool.begin() + static_cast<std::ptrdiff_t>(n_train),
               pool.begin() + static_cast<std::ptrdiff_t>(n_train + n_val));
  s.test.assign(pool.begin() + static_cast<std::ptrdiff_t>(n_train + n_val), pool.end());
  s.random_test = std::move(random_ids);
  return s;
}

void write_split(const std::filesystem::path& path, const SplitSpec& split) {
  nlohmann::ordered_json j;
  j["seed"] = split.seed;
  j["train"] = split.train;
  j["val"] = split.val;
  j["test"] = split.test;
  j["random_test"] = split.random_test;
  write_text_file(path, j.dump(1) + "\n");
}

SplitSpec read_split(const std::filesystem::path& path) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_text_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw data_error(path.string() + ": " + e.what());
  }
  SplitSpec s;
  try {
    s.seed = j.at("seed").get<std::uint64_t>();
    s.train = j.at("train").get<std::vector<std::string>>();
    s.val = j.at("val").get<std::vector<std::string>>();
    s.test = j.at("test").get<std::vector<std::string>>();
    s.random_test = j.value("random_test", std::vector<std::string>{});
  } catch (const nlohmann::json::exception& e) {
    throw data_error(path.string() + ": " + e.what());
  }
  std::set<std::string> seen;
  for (const auto* part : {&s.train, &s.val, &s.test})
    for (const auto& id : *part)
      if (!seen.insert(id).second) throw data_error("split sets overlap on id '" + id + "'");
  return s;
}

}  // namespace certkit::evalkit
