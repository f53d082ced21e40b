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

#include "scoring/ridge.hpp"

#include <cmath>

#include "common/error.hpp"

namespace certkit::scoring {

double sparse_dot(const SparseRow& row, const Eigen::VectorXd& dense) {
  double s = 0;
  for (const auto& [c, v] : row) s += v * dense[c];
  return s;
}

namespace {

double sparse_sparse_dot(const SparseRow& a, const SparseRow& b) {
  double s = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first == b[j].first) {
      s += a[i].second * b[j].second;
      ++i;
      ++j;
    } else if (a[i].first < b[j].first) {
      ++i;
    } else {
      ++j;
    }
  }
  return s;
}

}  // namespace

RidgeFit fit_ridge(const RidgeProblem& problem) {
  const auto n = static_cast<Eigen::Index>(problem.rows.size());
  const Eigen::Index p = problem.num_features;
  if (n == 0) throw data_error("ridge regression needs at least one sample");
  if (!problem.targets || problem.targets->rows() != n)
    throw usage_error("ridge targets must have one row per sample");
  if (problem.penalty < 0) throw usage_error("ridge penalty must be nonnegative");
  const Eigen::MatrixXd& Y = *problem.targets;
  const Eigen::Index k = Y.cols();

  Eigen::VectorXd w = Eigen::VectorXd::Ones(n);
  if (!problem.weights.empty()) {
    if (static_cast<Eigen::Index>(problem.weights.size()) != n)
      throw usage_error("ridge weights must have one entry per sample");
    for (Eigen::Index i = 0; i < n; ++i) {
      if (!(problem.weights[i] > 0)) throw usage_error("ridge weights must be positive");
      w[i] = problem.weights[i];
    }
  }
  const double wsum = w.sum();

  Eigen::VectorXd x_mean = Eigen::VectorXd::Zero(p);
  for (Eigen::Index i = 0; i < n; ++i)
    for (const auto& [c, v] : problem.rows[i]) x_mean[c] += w[i] * v;
  x_mean /= wsum;
  const Eigen::RowVectorXd y_mean = (w.transpose() * Y) / wsum;
  Eigen::MatrixXd Yc = Y.rowwise() - y_mean;

  RidgeFit fit;
  if (p <= n) {
    Eigen::MatrixXd Xc = Eigen::MatrixXd::Zero(n, p);
    for (Eigen::Index i = 0; i < n; ++i) {
      for (const auto& [c, v] : problem.rows[i]) Xc(i, c) = v;
      Xc.row(i) -= x_mean.transpose();
    }
    const Eigen::VectorXd sw = w.cwiseSqrt();
    const Eigen::MatrixXd Z = sw.asDiagonal() * Xc;
    Eigen::MatrixXd A = Z.transpose() * Z;
    A.diagonal().array() += problem.penalty;
    Eigen::LLT<Eigen::MatrixXd> llt(A);
    if (llt.info() != Eigen::Success)
      throw numeric_error("ridge normal equations are not positive definite");
    fit.coef = llt.solve(Z.transpose() * (sw.asDiagonal() * Yc));
  } else {
    // Dual form: beta = Zc^T (Zc Zc^T + penalty I)^-1 T.
    Eigen::VectorXd dot_mean(n);
    for (Eigen::Index i = 0; i < n; ++i) dot_mean[i] = sparse_dot(problem.rows[i], x_mean);
    const double mean_sq = x_mean.squaredNorm();
    const Eigen::VectorXd sw = w.cwiseSqrt();
    Eigen::MatrixXd K(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j <= i; ++j) {
        const double raw = sparse_sparse_dot(problem.rows[i], problem.rows[j]);
        const double centered = raw - dot_mean[i] - dot_mean[j] + mean_sq;
        K(i, j) = K(j, i) = sw[i] * sw[j] * centered;
      }
    }
    K.diagonal().array() += problem.penalty;
    Eigen::LLT<Eigen::MatrixXd> llt(K);
    if (llt.info() != Eigen::Success)
      throw numeric_error("ridge dual system is not positive definite (penalty must be > 0)");
    const Eigen::MatrixXd alpha = llt.solve(sw.asDiagonal() * Yc);
    const Eigen::MatrixXd scaled = sw.asDiagonal() * alpha;  // n x k
    fit.coef = Eigen::MatrixXd::Zero(p, k);
    for (Eigen::Index i = 0; i < n; ++i)
      for (const auto& [c, v] : problem.rows[i]) fit.coef.row(c) += v * scaled.row(i);
    fit.coef -= x_mean * scaled.colwise().sum();
  }
  fit.intercept = (y_mean - x_mean.transpose() * fit.coef).transpose();
  return fit;
}

}  // namespace certkit::scoring
