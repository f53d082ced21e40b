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

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "corpus/types.hpp"

namespace certkit::corpus {

// Order in which labels win exact majority ties, highest priority first.
using TiePriority = std::array<AspectLabel, kNumLabels>;
inline constexpr TiePriority kDefaultTiePriority{AspectLabel::kUncertain, AspectLabel::kCertain,
                                                 AspectLabel::kNotPresent};

struct GoldLabel {
  std::optional<double> sentence;  // mean Likert score
  std::optional<AspectLabels> aspects;
  std::size_t sentence_votes = 0;
  std::size_t aspect_votes = 0;
};

struct AggregationResult {
  std::map<std::string, GoldLabel> gold;
  std::vector<std::string> excluded_bad_text;
  std::vector<std::string> warnings;
};

// Sentence gold is the mean of Likert votes; each aspect takes the majority
// label with ties resolved by `ties`. A finding is dropped when a strict
// majority of its distinct annotators marked it bad_text.
AggregationResult aggregate_annotations(std::span<const AnnotationRecord> records,
                                        const TiePriority& ties = kDefaultTiePriority);

AspectLabel majority_label(std::span<const AspectLabel> votes, const TiePriority& ties);

}  // namespace certkit::corpus
