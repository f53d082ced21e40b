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

#include "evalkit/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <tuple>

#include "common/error.hpp"
#include "common/rng.hpp"

namespace certkit::evalkit {

const char* stratum_name(std::size_t stratum) {
  switch (stratum) {
    case 0: return "0 hedges";
    case 1: return "1 hedge";
    default: return "2+ hedges";
  }
}

std::array<std::size_t, kNumStrata> allocate_strata(std::size_t n, const StratumProportions& p) {
  for (double x : p)
    if (x < 0) throw usage_error("stratum proportions must be nonnegative");
  const double total = std::accumulate(p.begin(), p.end(), 0.0);
  if (std::fabs(total - 1.0) > 1e-9) throw usage_error("stratum proportions must sum to 1");
  std::array<std::size_t, kNumStrata> counts{};
  std::array<double, kNumStrata> residual{};
  long long sum = 0;
  for (std::size_t i = 0; i < kNumStrata; ++i) {
    const double exact = static_cast<double>(n) * p[i];
    counts[i] = static_cast<std::size_t>(std::llround(exact));
    residual[i] = exact - static_cast<double>(counts[i]);
    sum += static_cast<long long>(counts[i]);
  }
  long long diff = static_cast<long long>(n) - sum;
  while (diff != 0) {
    std::size_t pick = kNumStrata;
    for (std::size_t i = 0; i < kNumStrata; ++i) {
      if (diff < 0 && counts[i] == 0) continue;
      if (pick == kNumStrata || (diff > 0 ? residual[i] > residual[pick] : residual[i] < residual[pick]))
        pick = i;
    }
    if (diff > 0) {
      ++counts[pick];
      residual[pick] -= 1.0;
      --diff;
    } else {
      --counts[pick];
      residual[pick] += 1.0;
      ++diff;
    }
  }
  return counts;
}

StratifiedSample stratified_hedge_sample(const std::vector<corpus::ScientificFinding>& findings,
                                         std::size_t n, const lexicon::Lexicon& hedges,
                                         std::uint64_t seed, const StratumProportions& proportions) {
  std::array<std::vector<const corpus::ScientificFinding*>, kNumStrata> strata;
  for (const auto& f : findings) {
    const auto h = lexicon::count_hedges(f.text, hedges);
    strata[std::min<std::size_t>(h, kNumStrata - 1)].push_back(&f);
  }
  StratifiedSample out;
  out.stratum_sizes = allocate_strata(n, proportions);
  Rng rng(seed);
  for (std::size_t s = 0; s < kNumStrata; ++s) {
    auto& members = strata[s];
    out.available[s] = members.size();
    if (members.size() < out.stratum_sizes[s]) {
      throw data_error(std::string("stratum '") + stratum_name(s) + "' has " +
                       std::to_string(members.size()) + " findings, " +
                       std::to_string(out.stratum_sizes[s]) + " requested");
    }
    std::sort(members.begin(), members.end(), [](const auto* a, const auto* b) {
      return std::tie(a->finding_id, a->text) < std::tie(b->finding_id, b->text);
    });
    rng.shuffle(std::span(members));
    for (std::size_t i = 0; i < out.stratum_sizes[s]; ++i) out.findings.push_back(*members[i]);
  }
  return out;
}

}  // namespace certkit::evalkit
