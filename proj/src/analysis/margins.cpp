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

#include "analysis/margins.hpp"

#include <cmath>
#include <string>

namespace certkit::analysis {

std::vector<MarginRow> marginal_effects(const RegressionResult& result, std::string_view variable) {
  const Encoding* e = result.design.find(variable);
  if (e == nullptr)
    throw usage_error("marginal effects: variable '" + std::string(variable) +
                      "' is not in " + result.name);

  const auto c0 = static_cast<Eigen::Index>(e->first_column);
  std::vector<MarginRow> out;
  if (e->kind == VarKind::kContinuous) {
    MarginRow m{e->variable, "slope", result.beta(c0), std::sqrt(result.vcov(c0, c0)), 0, 0};
    m.ci_lo = m.margin - kCiZ * m.se;
    m.ci_hi = m.margin + kCiZ * m.se;
    out.push_back(m);
    return out;
  }

  // The prediction is linear, so the average over counterfactual rows is the
  // prediction at the counterfactual column means.
  Eigen::RowVectorXd base = result.design.X.colwise().mean();
  base.segment(c0, static_cast<Eigen::Index>(e->num_columns)).setZero();
  auto add = [&](const std::string& level, Eigen::Index col) {
    Eigen::RowVectorXd g = base;
    if (col >= 0) g(col) = 1.0;
    MarginRow m;
    m.variable = e->variable;
    m.level = level;
    m.margin = g.dot(result.beta);
    m.se = std::sqrt(std::max((g * result.vcov * g.transpose())(0, 0), 0.0));
    m.ci_lo = m.margin - kCiZ * m.se;
    m.ci_hi = m.margin + kCiZ * m.se;
    out.push_back(std::move(m));
  };
  add(e->reference, -1);
  for (std::size_t i = 0; i < e->levels.size(); ++i)
    add(e->levels[i], c0 + static_cast<Eigen::Index>(i));
  return out;
}

}  // namespace certkit::analysis
