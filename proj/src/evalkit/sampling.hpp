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
#include <cstdint>
#include <vector>

#include "corpus/types.hpp"
#include "lexicon/lexicon.hpp"

namespace certkit::evalkit {

// Strata: findings with 0 hedges, 1 hedge, 2+ hedges.
inline constexpr std::size_t kNumStrata = 3;
using StratumProportions = std::array<double, kNumStrata>;
inline constexpr StratumProportions kPhaseOneProportions{0.5, 0.35, 0.15};

const char* stratum_name(std::size_t stratum);

// round(n * p_i), then the difference to n is absorbed by the strata with
// the largest rounding residual (first stratum wins exact ties).
std::array<std::size_t, kNumStrata> allocate_strata(std::size_t n, const StratumProportions& p);

struct StratifiedSample {
  std::vector<corpus::ScientificFinding> findings;  // stratum 0, then 1, then 2
  std::array<std::size_t, kNumStrata> stratum_sizes{};
  std::array<std::size_t, kNumStrata> available{};
};

// Uniform sampling without replacement inside each stratum; deterministic in
// `seed` and independent of input order. Throws kData naming a stratum that
// has too few members.
StratifiedSample stratified_hedge_sample(const std::vector<corpus::ScientificFinding>& findings,
                                         std::size_t n, const lexicon::Lexicon& hedges,
                                         std::uint64_t seed,
                                         const StratumProportions& proportions = kPhaseOneProportions);

}  // namespace certkit::evalkit
