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

#include <string_view>
#include <vector>

#include "analysis/ols.hpp"

namespace certkit::analysis {

// Categorical: the sample-average prediction with every row set to each
// level in turn, reference first. Continuous: the slope. Delta-method CIs.
// Throws kUsage for a variable that is not in the fitted design.
std::vector<MarginRow> marginal_effects(const RegressionResult& result, std::string_view variable);

}  // namespace certkit::analysis
