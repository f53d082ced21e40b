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

#include <array>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include <Eigen/Dense>

#include "scoring/ridge.hpp"
#include "scoring/scorer.hpp"

namespace certkit::scoring {

inline constexpr std::size_t kDefaultVocabCapacity = 40000;
inline constexpr double kDefaultRidgePenalty = 1.0;
inline constexpr int kMaxNgram = 3;

struct BowExample {
  std::string text;
  std::optional<double> sentence_gold;
  std::optional<corpus::AspectLabels> aspect_gold;
  double weight = 1.0;
};

// Uni-, bi- and trigrams over tokenize(text), joined with '_'.
std::vector<std::string> extract_ngrams(std::string_view text);

struct LinearHead {
  double intercept = 0.0;
  Eigen::VectorXd weights;
};

struct BowModel {
  std::vector<std::string> vocabulary;  // sorted; index = feature column
  std::unordered_map<std::string, int> index;
  double ridge_penalty = kDefaultRidgePenalty;
  LinearHead sentence;
  // [aspect][label] one-vs-rest ridge classifiers; absent when the training
  // data had no aspect labels.
  std::vector<std::array<LinearHead, corpus::kNumLabels>> aspect_heads;

  SparseRow featurize(std::string_view text) const;
  void rebuild_index();
};

// Vocabulary = top-`capacity` n-grams by (weighted) document frequency, ties
// broken lexicographically. The sentence head is a ridge regression on
// examples with sentence gold; each (aspect, label) head is a ridge
// classifier (+1/-1 targets) on examples with aspect gold. Examples are put
// in canonical order first, so the result does not depend on input order.
BowModel fit_bow(std::span<const BowExample> examples, double ridge_penalty = kDefaultRidgePenalty,
                 std::size_t capacity = kDefaultVocabCapacity);

// argmax over the three one-vs-rest scores; exact ties go to uncertain, then
// certain, then not_present.
corpus::AspectLabel argmax_label(const std::array<double, corpus::kNumLabels>& scores);

class BowScorer final : public Scorer {
 public:
  explicit BowScorer(BowModel model) : model_(std::move(model)) {}

  CertaintyScore score(const corpus::ScientificFinding& finding) const override;
  std::string id() const override { return "lr-bow"; }
  std::string version() const override { return "1"; }
  const BowModel& model() const { return model_; }

  double predict_sentence(std::string_view text) const;

  nlohmann::ordered_json to_json() const;
  static BowScorer from_json(const nlohmann::json& j);

 private:
  BowModel model_;
};

}  // namespace certkit::scoring
