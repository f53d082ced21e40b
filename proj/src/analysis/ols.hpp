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

#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "analysis/design.hpp"
#include "common/error.hpp"

namespace certkit::analysis {

inline constexpr double kCiZ = 1.96;

enum class SeKind { kClassical, kHC1 };

struct Term {
  std::string name;
  double coef = 0.0;
  double se = 0.0;
  double t = 0.0;
  double p = 1.0;
  double ci_lo = 0.0;
  double ci_hi = 0.0;
};

struct MarginRow {
  std::string variable;
  std::string level;  // "slope" for continuous variables
  double margin = 0.0;
  double se = 0.0;
  double ci_lo = 0.0;
  double ci_hi = 0.0;
};

struct RegressionResult {
  std::string name;
  std::string dependent;
  std::vector<Term> terms;
  std::size_t n_obs = 0;
  double r_squared = 0.0;
  SeKind se_kind = SeKind::kClassical;
  Design design;
  Eigen::VectorXd beta;
  Eigen::MatrixXd vcov;
  Eigen::VectorXd residuals;
  std::vector<MarginRow> margins;
  std::vector<std::string> notes;

  const Term& term(std::string_view name) const;
  bool significant(std::string_view name, double level) const { return term(name).p < level; }
};

class RankDeficientError : public Error {
 public:
  explicit RankDeficientError(std::vector<std::string> columns);
  const std::vector<std::string>& columns() const { return columns_; }

 private:
  std::vector<std::string> columns_;
};

// Indices of columns lying (numerically) in the span of earlier columns.
std::vector<std::size_t> collinear_columns(const Eigen::MatrixXd& X, double tol = 1e-10);

// Least squares via Householder QR. Throws RankDeficientError, or kData
// when there are not more observations than parameters.
RegressionResult ols_fit(Design design, const Eigen::VectorXd& y,
                         SeKind se_kind = SeKind::kClassical);

}  // namespace certkit::analysis
