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

#include "scoring/scorer.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "common/error.hpp"
#include "common/jsonl.hpp"

namespace certkit::scoring {

double clamp_certainty(double v) {
  if (std::isnan(v)) throw numeric_error("certainty score is NaN");
  return std::clamp(v, kMinCertainty, kMaxCertainty);
}

std::vector<CertaintyScore> score_all(const Scorer& scorer,
                                      const std::vector<corpus::ScientificFinding>& findings) {
  std::vector<CertaintyScore> out;
  out.reserve(findings.size());
  for (const auto& f : findings) out.push_back(scorer.score(f));
  return out;
}

nlohmann::ordered_json to_json(const CertaintyScore& s) {
  nlohmann::ordered_json j;
  j["finding_id"] = s.finding_id;
  j["sentence_certainty"] = s.sentence_certainty;
  j["aspects"] = corpus::aspects_to_json(s.aspects);
  j["scorer_id"] = s.scorer_id;
  j["scorer_version"] = s.scorer_version;
  return j;
}

CertaintyScore score_from_json(const nlohmann::json& j) {
  CertaintyScore s;
  s.finding_id = j.at("finding_id").get<std::string>();
  const auto& v = j.at("sentence_certainty");
  if (!v.is_number()) throw data_error("sentence_certainty must be a number");
  s.sentence_certainty = v.get<double>();
  if (s.sentence_certainty < kMinCertainty || s.sentence_certainty > kMaxCertainty)
    throw data_error("sentence_certainty outside [1, 6]");
  s.aspects = corpus::aspects_from_json(j.at("aspects"));
  s.scorer_id = j.value("scorer_id", "");
  s.scorer_version = j.value("scorer_version", "");
  return s;
}

void write_scores(const std::filesystem::path& path, const std::vector<CertaintyScore>& scores,
                  const Manifest& manifest) {
  std::ostringstream out;
  out << manifest.jsonl_line() << '\n';
  for (const auto& s : scores) out << to_json(s).dump() << '\n';
  write_text_file(path, out.str());
}

std::vector<CertaintyScore> read_scores(const std::filesystem::path& path) {
  std::vector<CertaintyScore> out;
  auto errors = read_jsonl(path, [&](std::size_t, const nlohmann::json& j) {
    out.push_back(score_from_json(j));
  });
  if (!errors.empty())
    throw data_error(path.string() + ":" + std::to_string(errors.front().line) + ": " +
                     errors.front().message);
  return out;
}

}  // namespace certkit::scoring
