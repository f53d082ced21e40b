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

#include <span>
#include <vector>

#include "corpus/types.hpp"

namespace certkit::evalkit {

enum class AlphaMetric { kNominal, kInterval };

// Values assigned to one unit (item) by its annotators; units with fewer
// than two values are not pairable and are ignored.
using Unit = std::vector<double>;

// Krippendorff's alpha = 1 - D_o / D_e computed from the coincidence matrix.
// Throws kNumeric when no unit is pairable or expected disagreement is 0.
double krippendorff_alpha(std::span<const Unit> units, AlphaMetric metric);

// Sentence-level agreement: interval alpha over Likert votes.
double sentence_alpha(std::span<const corpus::AnnotationRecord> records);
// Aspect-level agreement for one aspect: nominal alpha over labels.
double aspect_alpha(std::span<const corpus::AnnotationRecord> records, corpus::Aspect aspect);

}  // namespace certkit::evalkit
