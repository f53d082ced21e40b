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

#include "scoring/hedge_model.hpp"

#include <cmath>

#include "common/error.hpp"

namespace certkit::scoring {

LinearFit fit_hedge_model(std::span<const std::pair<double, double>> pts) {
  if (pts.size() < 2) throw numeric_error("hedge model needs at least two points");
  double mx = 0, my = 0;
  for (const auto& [x, y] : pts) {
    mx += x;
    my += y;
  }
  mx /= static_cast<double>(pts.size());
  my /= static_cast<double>(pts.size());
  double sxx = 0, sxy = 0;
  for (const auto& [x, y] : pts) {
    sxx += (x - mx) * (x - mx);
    sxy += (x - mx) * (y - my);
  }
  if (sxx == 0.0) throw numeric_error("degenerate hedge model: all hedge counts are equal");
  const double slope = sxy / sxx;
  return {my - slope * mx, slope};
}

HedgeScorer::HedgeScorer(LinearFit fit, std::shared_ptr<const lexicon::Lexicon> hedges)
    : fit_(fit), hedges_(std::move(hedges)) {}

std::string HedgeScorer::version() const { return "1+" + hedges_->content_hash(); }

CertaintyScore HedgeScorer::score(const corpus::ScientificFinding& finding) const {
  const auto n = static_cast<double>(lexicon::count_hedges(finding.text, *hedges_));
  CertaintyScore s;
  s.finding_id = finding.finding_id;
  s.sentence_certainty = clamp_certainty(fit_.intercept + fit_.slope * n);
  s.aspects.fill(corpus::AspectLabel::kNotPresent);
  s.scorer_id = id();
  s.scorer_version = version();
  return s;
}

nlohmann::ordered_json HedgeScorer::to_json() const {
  nlohmann::ordered_json j;
  j["format"] = "certkit-hedge/1";
  j["intercept"] = fit_.intercept;
  j["slope"] = fit_.slope;
  j["hedge_lexicon_hash"] = hedges_->content_hash();
  return j;
}

HedgeScorer HedgeScorer::from_json(const nlohmann::json& j,
                                   std::shared_ptr<const lexicon::Lexicon> hedges) {
  if (j.value("format", "") != "certkit-hedge/1") throw data_error("not a hedge model file");
  return HedgeScorer({j.at("intercept").get<double>(), j.at("slope").get<double>()},
                     std::move(hedges));
}

}  // namespace certkit::scoring
