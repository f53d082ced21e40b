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

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace certkit::analysis {

enum class VarKind { kContinuous, kCategorical };

// Column store of named variables. Missing numeric values are NaN; missing
// categorical values are empty strings.
class Frame {
 public:
  explicit Frame(std::size_t rows = 0) : rows_(rows) {}

  std::size_t rows() const { return rows_; }
  void add_numeric(const std::string& name, std::vector<double> values);
  void add_categorical(const std::string& name, std::vector<std::string> values);

  bool has(std::string_view name) const;
  VarKind kind(std::string_view name) const;
  const std::vector<double>& numeric(std::string_view name) const;
  const std::vector<std::string>& categorical(std::string_view name) const;
  bool missing(std::string_view name, std::size_t row) const;

  Frame select(std::span<const std::size_t> rows) const;

 private:
  std::size_t rows_;
  std::map<std::string, std::vector<double>, std::less<>> numeric_;
  std::map<std::string, std::vector<std::string>, std::less<>> categorical_;
};

// Most frequent value; the lexicographically smallest wins exact ties.
std::string reference_level(std::span<const std::string> values);

struct Encoding {
  std::string variable;
  VarKind kind = VarKind::kContinuous;
  std::size_t first_column = 0;
  std::size_t num_columns = 0;
  std::string reference;            // categorical only
  std::vector<std::string> levels;  // non-reference levels in column order
};

struct Design {
  Eigen::MatrixXd X;
  std::vector<std::string> columns;
  std::vector<Encoding> encodings;

  const Encoding* find(std::string_view variable) const;
};

// Intercept column first, then the variables in the given order. A
// categorical contributes one indicator column per non-reference level,
// sorted, named "var[level]". Rows must be complete.
Design build_design(const Frame& frame, std::span<const std::string> variables);

}  // namespace certkit::analysis
