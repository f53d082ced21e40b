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
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "corpus/annotations.hpp"
#include "corpus/types.hpp"
#include "lexicon/lexicon.hpp"

namespace certkit::analysis {

struct HedgeCurvePoint {
  std::size_t hedges = 0;
  std::size_t n = 0;
  double mean_certainty = 0.0;
};

struct HedgeCurve {
  std::vector<HedgeCurvePoint> points;  // ascending hedge count
  double r = 0.0;                       // Pearson r over the raw points
  std::size_t n = 0;
};

// Throws kNumeric (from pearson_r) when either variable is constant.
HedgeCurve hedge_certainty_curve(std::span<const std::pair<std::size_t, double>> hedges_and_gold);

// Uses every finding with a gold sentence label.
HedgeCurve hedge_certainty_curve(const std::vector<corpus::ScientificFinding>& findings,
                                 const std::map<std::string, corpus::GoldLabel>& gold,
                                 const lexicon::Lexicon& hedges);

struct AssociationCell {
  corpus::Aspect aspect = corpus::Aspect::kNumber;
  corpus::AspectLabel label = corpus::AspectLabel::kCertain;
  std::size_t n = 0;
  double mean = 0.0;
  double ci_lo = 0.0;  // mean -/+ 1.96 s/sqrt(n); NaN when n < 2
  double ci_hi = 0.0;
  double relative = 0.0;  // mean - corpus mean
  bool omitted = false;   // no members; the statistics are meaningless
};

struct Association {
  double corpus_mean = 0.0;
  std::size_t n = 0;
  std::vector<AssociationCell> cells;  // aspect-major, certain before uncertain
};

// Throws kData when no item is given.
Association aspect_sentence_association(
    std::span<const std::pair<double, corpus::AspectLabels>> items);

// Uses findings whose gold has both the sentence and the aspect level.
Association aspect_sentence_association(const std::map<std::string, corpus::GoldLabel>& gold);

}  // namespace certkit::analysis
