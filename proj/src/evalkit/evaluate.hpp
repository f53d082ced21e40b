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

#include <map>
#include <string>
#include <vector>

#include "corpus/annotations.hpp"
#include "evalkit/split.hpp"
#include "scoring/scorer.hpp"

namespace certkit::evalkit {

struct SentenceEval {
  double r_full_test = 0.0;    // test + random_test
  double r_random_set = 0.0;   // random_test only
  std::size_t n_full = 0;
  std::size_t n_random = 0;
};

// Pearson r between predicted and gold sentence certainty. Items without a
// prediction or without sentence gold are skipped. Zero variance throws.
SentenceEval evaluate_sentence(const std::map<std::string, double>& predicted,
                               const std::map<std::string, corpus::GoldLabel>& gold,
                               const SplitSpec& split);

struct AspectCell {
  corpus::Aspect aspect;
  corpus::AspectLabel label;  // certain or uncertain
  double f1 = 0.0;
  std::size_t support = 0;    // gold positives
};

struct AspectEval {
  std::vector<AspectCell> cells;  // 6 aspects x {certain, uncertain}
  double mean_f1 = 0.0;           // unweighted over all cells
  std::size_t n = 0;
};

AspectEval evaluate_aspects(const std::map<std::string, corpus::AspectLabels>& predicted,
                            const std::map<std::string, corpus::GoldLabel>& gold,
                            const std::vector<std::string>& ids);

// finding_id -> score
std::map<std::string, scoring::CertaintyScore> index_scores(
    const std::vector<scoring::CertaintyScore>& scores);

}  // namespace certkit::evalkit
