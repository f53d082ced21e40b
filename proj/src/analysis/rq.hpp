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
#include <string>
#include <string_view>
#include <vector>

#include "analysis/design.hpp"
#include "analysis/ols.hpp"
#include "corpus/types.hpp"
#include "matching/match.hpp"
#include "scoring/scorer.hpp"

namespace certkit::analysis {

struct RegressionSpec {
  std::string name;
  std::string dependent;
  std::vector<std::string> predictors;     // terms of interest; margins are reported
  std::vector<std::string> controls;       // continuous controls
  std::vector<std::string> fixed_effects;  // categorical controls
  std::string sample_filter;               // human-readable description
};

// Fits `spec` on the complete rows of `frame`. Controls and fixed effects
// that are constant after filtering or collinear with earlier columns are
// dropped with a note, as are trailing controls while the design has at
// least as many columns as rows. Degenerate predictors are dropped too, as
// long as one remains.
RegressionResult fit_spec(const RegressionSpec& spec, const Frame& frame,
                          SeKind se_kind = SeKind::kClassical);

struct RqData {
  const corpus::Corpus* corpus = nullptr;
  std::span<const corpus::ScientificFinding> findings;
  std::span<const scoring::CertaintyScore> scores;
  std::span<const matching::MatchedPair> pairs;
  std::span<const std::string> abbreviations;
};

struct RqOptions {
  SeKind se_kind = SeKind::kClassical;
  std::size_t bins = 4;  // quantile buckets for the binned RQ4/RQ5 variants
};

// "rq1".."rq5". RQ1/RQ2 use two rows per matched pair with a source term;
// RQ2 fits certain-vs-rest and uncertain-vs-rest per aspect; RQ3 regresses
// news certainty on the paired abstract's aspect labels; RQ4/RQ5 fit
// impact factor and author count on abstract and news findings, each once
// continuous and once binned.
std::vector<RegressionResult> run_rq(std::string_view name, const RqData& data,
                                     const RqOptions& options = {});

const std::vector<std::string>& rq_names();

// Quantile bucket labels "Q1".."Qk" (fewer when quantiles coincide); NaN
// values map to "". `edges` receives the interior cut points.
std::vector<std::string> quantile_bins(std::span<const double> values, std::size_t k,
                                       std::vector<double>* edges = nullptr);

}  // namespace certkit::analysis
