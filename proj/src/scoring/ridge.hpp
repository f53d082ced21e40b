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

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace certkit::scoring {

// Row-major sparse design: each row holds (column, value) pairs with
// strictly increasing columns.
using SparseRow = std::vector<std::pair<int, double>>;

struct RidgeProblem {
  std::span<const SparseRow> rows;
  int num_features = 0;
  // n x k targets; one column per head sharing the design.
  const Eigen::MatrixXd* targets = nullptr;
  // Optional per-row weights (empty = all ones).
  std::span<const double> weights;
  double penalty = 1.0;
};

struct RidgeFit {
  Eigen::MatrixXd coef;       // num_features x k
  Eigen::VectorXd intercept;  // k
};

// Minimises sum_i w_i (y_i - b - x_i.beta)^2 + penalty * |beta|^2 with an
// unpenalised intercept, by centering on the weighted means. Uses the primal
// normal equations when num_features <= n and the dual (n x n) system
// otherwise; both are solved by Cholesky.
RidgeFit fit_ridge(const RidgeProblem& problem);

double sparse_dot(const SparseRow& row, const Eigen::VectorXd& dense);

}  // namespace certkit::scoring
