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

#include "evalkit/krippendorff.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "common/error.hpp"

namespace certkit::evalkit {

double krippendorff_alpha(std::span<const Unit> units, AlphaMetric metric) {
  std::vector<double> levels;
  for (const auto& u : units)
    if (u.size() >= 2) levels.insert(levels.end(), u.begin(), u.end());
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  if (levels.empty()) throw numeric_error("krippendorff_alpha: no pairable values");

  const std::size_t L = levels.size();
  auto level_of = [&](double v) {
    return static_cast<std::size_t>(std::lower_bound(levels.begin(), levels.end(), v) - levels.begin());
  };
  std::vector<double> o(L * L, 0.0);
  for (const auto& u : units) {
    const std::size_t m = u.size();
    if (m < 2) continue;
    std::vector<std::size_t> counts(L, 0);
    for (double v : u) ++counts[level_of(v)];
    const double scale = 1.0 / static_cast<double>(m - 1);
    for (std::size_t c = 0; c < L; ++c) {
      if (!counts[c]) continue;
      for (std::size_t k = 0; k < L; ++k) {
        if (!counts[k]) continue;
        const double pairs = c == k ? static_cast<double>(counts[c] * (counts[c] - 1))
                                    : static_cast<double>(counts[c] * counts[k]);
        o[c * L + k] += pairs * scale;
      }
    }
  }
  std::vector<double> marg(L, 0.0);
  double n = 0;
  for (std::size_t c = 0; c < L; ++c) {
    for (std::size_t k = 0; k < L; ++k) marg[c] += o[c * L + k];
    n += marg[c];
  }
  auto delta2 = [&](std::size_t c, std::size_t k) {
    if (metric == AlphaMetric::kNominal) return c == k ? 0.0 : 1.0;
    const double d = levels[c] - levels[k];
    return d * d;
  };
  double observed = 0, expected = 0;
  for (std::size_t c = 0; c < L; ++c) {
    for (std::size_t k = 0; k < L; ++k) {
      const double d = delta2(c, k);
      observed += o[c * L + k] * d;
      expected += marg[c] * marg[k] * d;
    }
  }
  observed /= n;
  expected /= n * (n - 1);
  if (expected == 0.0) throw numeric_error("krippendorff_alpha: no expected disagreement (single value)");
  return 1.0 - observed / expected;
}

namespace {
template <typename Extract>
std::vector<Unit> collect_units(std::span<const corpus::AnnotationRecord> records,
                                corpus::AnnotationKind kind, Extract extract) {
  std::map<std::string, Unit> by_finding;
  for (const auto& r : records)
    if (r.kind == kind) by_finding[r.finding_id].push_back(extract(r));
  std::vector<Unit> units;
  units.reserve(by_finding.size());
  for (auto& [id, u] : by_finding) units.push_back(std::move(u));
  return units;
}
}  // namespace

double sentence_alpha(std::span<const corpus::AnnotationRecord> records) {
  auto units = collect_units(records, corpus::AnnotationKind::kSentenceLevel,
                             [](const auto& r) { return static_cast<double>(*r.likert); });
  return krippendorff_alpha(units, AlphaMetric::kInterval);
}

double aspect_alpha(std::span<const corpus::AnnotationRecord> records, corpus::Aspect aspect) {
  auto units = collect_units(records, corpus::AnnotationKind::kAspectLevel, [&](const auto& r) {
    return static_cast<double>((*r.aspects)[static_cast<int>(aspect)]);
  });
  return krippendorff_alpha(units, AlphaMetric::kNominal);
}

}  // namespace certkit::evalkit
