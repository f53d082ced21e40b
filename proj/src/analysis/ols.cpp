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

#include "analysis/ols.hpp"

#include <cmath>
#include <limits>

#include <boost/math/distributions/students_t.hpp>

namespace certkit::analysis {

namespace {

std::string join_columns(const std::vector<std::string>& cols) {
  std::string out;
  for (const auto& c : cols) {
    if (!out.empty()) out += ", ";
    out += "'" + c + "'";
  }
  return out;
}

double two_sided_p(double t, double dof) {
  if (std::isnan(t)) return std::numeric_limits<double>::quiet_NaN();
  if (std::isinf(t)) return 0.0;
  boost::math::students_t dist(dof);
  return 2.0 * boost::math::cdf(boost::math::complement(dist, std::fabs(t)));
}

}  // namespace

RankDeficientError::RankDeficientError(std::vector<std::string> columns)
    : Error(ErrorKind::kNumeric,
            "rank-deficient design: collinear column(s) " + join_columns(columns)),
      columns_(std::move(columns)) {}

const Term& RegressionResult::term(std::string_view name) const {
  for (const auto& t : terms)
    if (t.name == name) return t;
  throw usage_error("no term '" + std::string(name) + "' in " + this->name);
}

std::vector<std::size_t> collinear_columns(const Eigen::MatrixXd& X, double tol) {
  const Eigen::Index p = X.cols();
  Eigen::VectorXd norms = X.colwise().norm().transpose();
  Eigen::MatrixXd G = X.transpose() * X;
  std::vector<std::size_t> bad;
  std::vector<Eigen::Index> kept;
  Eigen::MatrixXd L = Eigen::MatrixXd::Zero(p, p);
  for (Eigen::Index j = 0; j < p; ++j) {
    if (norms(j) == 0.0) {
      bad.push_back(static_cast<std::size_t>(j));
      continue;
    }
    // Row j of the Cholesky factor restricted to the kept columns, on the
    // unit-norm scaled Gram matrix.
    for (std::size_t a = 0; a < kept.size(); ++a) {
      const Eigen::Index k = kept[a];
      double s = G(j, k) / (norms(j) * norms(k));
      for (std::size_t b = 0; b < a; ++b) s -= L(j, kept[b]) * L(k, kept[b]);
      L(j, k) = s / L(k, k);
    }
    double d = 1.0;
    for (auto k : kept) d -= L(j, k) * L(j, k);
    if (d <= tol) {
      for (auto k : kept) L(j, k) = 0.0;
      bad.push_back(static_cast<std::size_t>(j));
      continue;
    }
    L(j, j) = std::sqrt(d);
    kept.push_back(j);
  }
  return bad;
}

RegressionResult ols_fit(Design design, const Eigen::VectorXd& y, SeKind se_kind) {
  const Eigen::Index n = design.X.rows();
  const Eigen::Index p = design.X.cols();
  if (y.size() != n) throw usage_error("ols: response length does not match design");
  if (n <= p)
    throw data_error("ols: " + std::to_string(n) + " observations for " + std::to_string(p) +
                     " parameters");
  if (!y.allFinite()) throw data_error("ols: non-finite response");

  auto bad = collinear_columns(design.X);
  if (!bad.empty()) {
    std::vector<std::string> names;
    for (auto j : bad) names.push_back(design.columns[j]);
    throw RankDeficientError(std::move(names));
  }

  Eigen::HouseholderQR<Eigen::MatrixXd> qr(design.X);
  Eigen::VectorXd beta = qr.solve(y);
  Eigen::MatrixXd R = qr.matrixQR().topRows(p).triangularView<Eigen::Upper>();
  Eigen::MatrixXd Rinv =
      R.triangularView<Eigen::Upper>().solve(Eigen::MatrixXd::Identity(p, p));
  Eigen::MatrixXd xtx_inv = Rinv * Rinv.transpose();

  Eigen::VectorXd resid = y - design.X * beta;
  const double rss = resid.squaredNorm();
  const double dof = static_cast<double>(n - p);

  Eigen::MatrixXd vcov;
  if (se_kind == SeKind::kClassical) {
    vcov = xtx_inv * (rss / dof);
  } else {
    Eigen::MatrixXd meat = design.X.transpose() * resid.array().square().matrix().asDiagonal() *
                           design.X;
    vcov = xtx_inv * meat * xtx_inv * (static_cast<double>(n) / dof);
  }

  RegressionResult r;
  r.n_obs = static_cast<std::size_t>(n);
  r.se_kind = se_kind;
  const double tss = (y.array() - y.mean()).square().sum();
  r.r_squared = tss > 0.0 ? 1.0 - rss / tss : std::numeric_limits<double>::quiet_NaN();
  for (Eigen::Index j = 0; j < p; ++j) {
    Term t;
    t.name = design.columns[static_cast<std::size_t>(j)];
    t.coef = beta(j);
    t.se = std::sqrt(std::max(vcov(j, j), 0.0));
    if (t.se > 0.0) {
      t.t = t.coef / t.se;
    } else {
      t.t = t.coef == 0.0 ? 0.0 : std::copysign(std::numeric_limits<double>::infinity(), t.coef);
    }
    t.p = (t.se == 0.0 && t.coef == 0.0) ? 1.0 : two_sided_p(t.t, dof);
    t.ci_lo = t.coef - kCiZ * t.se;
    t.ci_hi = t.coef + kCiZ * t.se;
    r.terms.push_back(std::move(t));
  }
  r.beta = std::move(beta);
  r.vcov = std::move(vcov);
  r.residuals = std::move(resid);
  r.design = std::move(design);
  return r;
}

}  // namespace certkit::analysis
