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

#include <memory>
#include <span>
#include <utility>

#include "lexicon/lexicon.hpp"
#include "scoring/scorer.hpp"

namespace certkit::scoring {

struct LinearFit {
  double intercept = 0.0;
  double slope = 0.0;
};

// Least squares on one feature. Throws kNumeric when all x are equal.
LinearFit fit_hedge_model(std::span<const std::pair<double, double>> count_and_gold);

// certainty = intercept + slope * hedge_count, clamped. Aspects are not
// modelled and are reported as not_present.
class HedgeScorer final : public Scorer {
 public:
  HedgeScorer(LinearFit fit, std::shared_ptr<const lexicon::Lexicon> hedges);

  CertaintyScore score(const corpus::ScientificFinding& finding) const override;
  std::string id() const override { return "lr-hedges"; }
  std::string version() const override;
  const LinearFit& fit() const { return fit_; }
  const lexicon::Lexicon& hedges() const { return *hedges_; }

  nlohmann::ordered_json to_json() const;
  static HedgeScorer from_json(const nlohmann::json& j,
                               std::shared_ptr<const lexicon::Lexicon> hedges);

 private:
  LinearFit fit_;
  std::shared_ptr<const lexicon::Lexicon> hedges_;
};

}  // namespace certkit::scoring
