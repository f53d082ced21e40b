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
#include "json.hpp"

namespace certkit::scoring {

inline constexpr double kMinCertainty = 1.0;
inline constexpr double kMaxCertainty = 6.0;

struct CertaintyScore {
  std::string finding_id;
  double sentence_certainty = kMinCertainty;  // always within [1, 6]
  corpus::AspectLabels aspects{};
  std::string scorer_id;
  std::string scorer_version;

  bool operator==(const CertaintyScore&) const = default;
};

double clamp_certainty(double v);

// Every scorer is a pure function of its frozen model state.
class Scorer {
 public:
  virtual ~Scorer() = default;
  virtual CertaintyScore score(const corpus::ScientificFinding& finding) const = 0;
  virtual std::string id() const = 0;
  virtual std::string version() const = 0;
};

std::vector<CertaintyScore> score_all(const Scorer& scorer,
                                      const std::vector<corpus::ScientificFinding>& findings);

nlohmann::ordered_json to_json(const CertaintyScore& s);
CertaintyScore score_from_json(const nlohmann::json& j);

void write_scores(const std::filesystem::path& path, const std::vector<CertaintyScore>& scores,
                  const Manifest& manifest);
// The first malformed line throws.
std::vector<CertaintyScore> read_scores(const std::filesystem::path& path);

}  // namespace certkit::scoring
