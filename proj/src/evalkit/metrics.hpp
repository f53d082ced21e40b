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

#include "common/error.hpp"

namespace certkit::evalkit {

// Sample Pearson correlation. Throws kNumeric on length mismatch, fewer
// than two points or zero variance in either input.
double pearson_r(std::span<const double> xs, std::span<const double> ys);

struct Confusion {
  std::size_t tp = 0, fp = 0, fn = 0, tn = 0;
};

template <typename Label>
Confusion one_vs_rest(std::span<const Label> gold, std::span<const Label> pred, const Label& positive) {
  if (gold.size() != pred.size()) throw usage_error("gold and predicted label lists differ in length");
  Confusion c;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    const bool g = gold[i] == positive, p = pred[i] == positive;
    if (g && p) ++c.tp;
    else if (!g && p) ++c.fp;
    else if (g && !p) ++c.fn;
    else ++c.tn;
  }
  return c;
}

// 2TP / (2TP + FP + FN); 0 when there are no positives in either list.
double f1_from(const Confusion& c);

template <typename Label>
double binary_f1(std::span<const Label> gold, std::span<const Label> pred, const Label& positive) {
  return f1_from(one_vs_rest(gold, pred, positive));
}

}  // namespace certkit::evalkit
