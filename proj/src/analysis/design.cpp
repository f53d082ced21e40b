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

#include "analysis/design.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "common/error.hpp"

namespace certkit::analysis {

void Frame::add_numeric(const std::string& name, std::vector<double> values) {
  if (values.size() != rows_) throw usage_error("frame: column '" + name + "' has wrong length");
  categorical_.erase(name);
  numeric_[name] = std::move(values);
}

void Frame::add_categorical(const std::string& name, std::vector<std::string> values) {
  if (values.size() != rows_) throw usage_error("frame: column '" + name + "' has wrong length");
  numeric_.erase(name);
  categorical_[name] = std::move(values);
}

bool Frame::has(std::string_view name) const {
  return numeric_.contains(name) || categorical_.contains(name);
}

VarKind Frame::kind(std::string_view name) const {
  if (numeric_.contains(name)) return VarKind::kContinuous;
  if (categorical_.contains(name)) return VarKind::kCategorical;
  throw usage_error("unknown variable '" + std::string(name) + "'");
}

const std::vector<double>& Frame::numeric(std::string_view name) const {
  auto it = numeric_.find(name);
  if (it == numeric_.end()) throw usage_error("no numeric variable '" + std::string(name) + "'");
  return it->second;
}

const std::vector<std::string>& Frame::categorical(std::string_view name) const {
  auto it = categorical_.find(name);
  if (it == categorical_.end())
    throw usage_error("no categorical variable '" + std::string(name) + "'");
  return it->second;
}

bool Frame::missing(std::string_view name, std::size_t row) const {
  if (kind(name) == VarKind::kContinuous) return !std::isfinite(numeric(name)[row]);
  return categorical(name)[row].empty();
}

Frame Frame::select(std::span<const std::size_t> rows) const {
  Frame out(rows.size());
  for (const auto& [name, col] : numeric_) {
    std::vector<double> v;
    v.reserve(rows.size());
    for (auto r : rows) v.push_back(col.at(r));
    out.numeric_[name] = std::move(v);
  }
  for (const auto& [name, col] : categorical_) {
    std::vector<std::string> v;
    v.reserve(rows.size());
    for (auto r : rows) v.push_back(col.at(r));
    out.categorical_[name] = std::move(v);
  }
  return out;
}

std::string reference_level(std::span<const std::string> values) {
  std::map<std::string, std::size_t> counts;
  for (const auto& v : values) ++counts[v];
  std::string best;
  std::size_t best_n = 0;
  for (const auto& [level, n] : counts) {
    if (n > best_n) {
      best = level;
      best_n = n;
    }
  }
  return best;
}

const Encoding* Design::find(std::string_view variable) const {
  for (const auto& e : encodings)
    if (e.variable == variable) return &e;
  return nullptr;
}

Design build_design(const Frame& frame, std::span<const std::string> variables) {
  const std::size_t n = frame.rows();
  Design d;
  std::size_t p = 1;
  for (const auto& name : variables) {
    Encoding e;
    e.variable = name;
    e.kind = frame.kind(name);
    e.first_column = p;
    if (e.kind == VarKind::kContinuous) {
      e.num_columns = 1;
    } else {
      const auto& vals = frame.categorical(name);
      e.reference = reference_level(vals);
      std::set<std::string> levels(vals.begin(), vals.end());
      levels.erase(e.reference);
      e.levels.assign(levels.begin(), levels.end());
      e.num_columns = e.levels.size();
    }
    p += e.num_columns;
    d.encodings.push_back(std::move(e));
  }

  d.X = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(p));
  d.X.col(0).setOnes();
  d.columns.push_back("(Intercept)");
  for (const auto& e : d.encodings) {
    const auto c0 = static_cast<Eigen::Index>(e.first_column);
    if (e.kind == VarKind::kContinuous) {
      d.columns.push_back(e.variable);
      const auto& vals = frame.numeric(e.variable);
      for (std::size_t i = 0; i < n; ++i) {
        if (!std::isfinite(vals[i]))
          throw data_error("design: missing value for '" + e.variable + "'");
        d.X(static_cast<Eigen::Index>(i), c0) = vals[i];
      }
    } else {
      for (const auto& l : e.levels) d.columns.push_back(e.variable + "[" + l + "]");
      const auto& vals = frame.categorical(e.variable);
      for (std::size_t i = 0; i < n; ++i) {
        if (vals[i].empty()) throw data_error("design: missing value for '" + e.variable + "'");
        auto it = std::lower_bound(e.levels.begin(), e.levels.end(), vals[i]);
        if (it != e.levels.end() && *it == vals[i])
          d.X(static_cast<Eigen::Index>(i), c0 + (it - e.levels.begin())) = 1.0;
      }
    }
  }
  return d;
}

}  // namespace certkit::analysis
