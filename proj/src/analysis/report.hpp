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

#include "analysis/descriptive.hpp"
#include "analysis/ols.hpp"
#include "common/manifest.hpp"

namespace certkit::analysis {

// Shortest round-trippable-enough decimal ("%.12g"); "nan"/"inf" spelled out.
std::string format_number(double v);

// <dir>/<name>.csv (term, coef, se, t, p, ci_lo, ci_hi) and
// <dir>/<name>_margins.csv (variable, level, margin, ci_lo, ci_hi). Notes,
// n_obs and r_squared go in '#' comment lines after the manifest. Returns
// the files written.
std::vector<std::filesystem::path> write_regression(const std::filesystem::path& dir,
                                                    const RegressionResult& result,
                                                    const Manifest& manifest, bool svg);

std::vector<std::filesystem::path> write_hedge_curve(const std::filesystem::path& dir,
                                                     const HedgeCurve& curve,
                                                     const Manifest& manifest, bool svg);

std::vector<std::filesystem::path> write_association(const std::filesystem::path& dir,
                                                     const Association& assoc,
                                                     const Manifest& manifest, bool svg);

// A bare-bones chart: one point (or bar) per label with optional error bars.
struct ChartPoint {
  std::string label;
  double value = 0.0;
  double lo = 0.0;  // NaN: no error bar
  double hi = 0.0;
};
std::string render_svg(const std::string& title, const std::vector<ChartPoint>& points,
                       bool line);

}  // namespace certkit::analysis
