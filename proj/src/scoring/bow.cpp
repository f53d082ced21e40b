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

#include "scoring/bow.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

#include "common/error.hpp"
#include "lexicon/tokenize.hpp"

namespace certkit::scoring {

using corpus::AspectLabel;
using corpus::kNumAspects;
using corpus::kNumLabels;

std::vector<std::string> extract_ngrams(std::string_view text) {
  const auto tokens = lexicon::tokenize(text);
  std::vector<std::string> grams;
  for (int n = 1; n <= kMaxNgram; ++n) {
    for (std::size_t i = 0; i + static_cast<std::size_t>(n) <= tokens.size(); ++i) {
      std::string g = tokens[i];
      for (int k = 1; k < n; ++k) {
        g += '_';
        g += tokens[i + static_cast<std::size_t>(k)];
      }
      grams.push_back(std::move(g));
    }
  }
  return grams;
}

void BowModel::rebuild_index() {
  index.clear();
  for (std::size_t i = 0; i < vocabulary.size(); ++i) index.emplace(vocabulary[i], static_cast<int>(i));
}

SparseRow BowModel::featurize(std::string_view text) const {
  std::map<int, double> counts;
  for (const auto& g : extract_ngrams(text)) {
    auto it = index.find(g);
    if (it != index.end()) counts[it->second] += 1.0;
  }
  return SparseRow(counts.begin(), counts.end());
}

AspectLabel argmax_label(const std::array<double, kNumLabels>& scores) {
  constexpr std::array<AspectLabel, kNumLabels> kPriority{AspectLabel::kUncertain,
                                                          AspectLabel::kCertain,
                                                          AspectLabel::kNotPresent};
  AspectLabel best = kPriority[0];
  for (auto l : kPriority)
    if (scores[static_cast<int>(l)] > scores[static_cast<int>(best)]) best = l;
  return best;
}

namespace {

bool canonical_less(const BowExample& a, const BowExample& b) {
  auto key = [](const BowExample& e) {
    std::array<int, kNumAspects> asp{};
    asp.fill(-1);
    if (e.aspect_gold)
      for (std::size_t i = 0; i < kNumAspects; ++i) asp[i] = static_cast<int>((*e.aspect_gold)[i]);
    return std::make_tuple(std::cref(e.text), e.sentence_gold.has_value(),
                           e.sentence_gold.value_or(0.0), asp, e.weight);
  };
  return key(a) < key(b);
}

LinearHead head_from(const RidgeFit& fit, Eigen::Index col) {
  return {fit.intercept[col], fit.coef.col(col)};
}

}  // namespace

BowModel fit_bow(std::span<const BowExample> input, double ridge_penalty, std::size_t capacity) {
  if (input.empty()) throw data_error("BoW training set is empty");
  if (!(ridge_penalty > 0)) throw usage_error("ridge penalty must be positive");
  std::vector<BowExample> examples(input.begin(), input.end());
  std::sort(examples.begin(), examples.end(), canonical_less);

  // Weighted document frequency.
  std::map<std::string, double> df;
  for (const auto& e : examples) {
    auto grams = extract_ngrams(e.text);
    std::sort(grams.begin(), grams.end());
    grams.erase(std::unique(grams.begin(), grams.end()), grams.end());
    for (auto& g : grams) df[g] += e.weight;
  }
  std::vector<std::pair<std::string, double>> ranked(df.begin(), df.end());
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  if (ranked.size() > capacity) ranked.resize(capacity);

  BowModel model;
  model.ridge_penalty = ridge_penalty;
  for (auto& [g, _] : ranked) model.vocabulary.push_back(g);
  std::sort(model.vocabulary.begin(), model.vocabulary.end());
  model.rebuild_index();
  const int p = static_cast<int>(model.vocabulary.size());

  std::vector<SparseRow> sent_rows, aspect_rows;
  std::vector<double> sent_y, sent_w, aspect_w;
  std::vector<const corpus::AspectLabels*> aspect_y;
  for (const auto& e : examples) {
    auto row = model.featurize(e.text);
    if (e.sentence_gold) {
      sent_rows.push_back(row);
      sent_y.push_back(*e.sentence_gold);
      sent_w.push_back(e.weight);
    }
    if (e.aspect_gold) {
      aspect_rows.push_back(std::move(row));
      aspect_y.push_back(&*e.aspect_gold);
      aspect_w.push_back(e.weight);
    }
  }
  if (sent_rows.empty()) throw data_error("BoW training set has no sentence-level gold labels");

  Eigen::MatrixXd ys = Eigen::Map<const Eigen::VectorXd>(sent_y.data(), static_cast<Eigen::Index>(sent_y.size()));
  auto sent_fit = fit_ridge({sent_rows, p, &ys, sent_w, ridge_penalty});
  model.sentence = head_from(sent_fit, 0);

  if (!aspect_rows.empty()) {
    const auto n = static_cast<Eigen::Index>(aspect_rows.size());
    Eigen::MatrixXd targets(n, static_cast<Eigen::Index>(kNumAspects * kNumLabels));
    for (Eigen::Index i = 0; i < n; ++i)
      for (std::size_t a = 0; a < kNumAspects; ++a)
        for (std::size_t l = 0; l < kNumLabels; ++l)
          targets(i, static_cast<Eigen::Index>(a * kNumLabels + l)) =
              static_cast<std::size_t>((*aspect_y[i])[a]) == l ? 1.0 : -1.0;
    auto fit = fit_ridge({aspect_rows, p, &targets, aspect_w, ridge_penalty});
    model.aspect_heads.resize(kNumAspects);
    for (std::size_t a = 0; a < kNumAspects; ++a)
      for (std::size_t l = 0; l < kNumLabels; ++l)
        model.aspect_heads[a][l] = head_from(fit, static_cast<Eigen::Index>(a * kNumLabels + l));
  }
  return model;
}

double BowScorer::predict_sentence(std::string_view text) const {
  const auto row = model_.featurize(text);
  return model_.sentence.intercept + sparse_dot(row, model_.sentence.weights);
}

CertaintyScore BowScorer::score(const corpus::ScientificFinding& finding) const {
  const auto row = model_.featurize(finding.text);
  CertaintyScore s;
  s.finding_id = finding.finding_id;
  s.sentence_certainty =
      clamp_certainty(model_.sentence.intercept + sparse_dot(row, model_.sentence.weights));
  s.aspects.fill(AspectLabel::kNotPresent);
  if (!model_.aspect_heads.empty()) {
    for (std::size_t a = 0; a < kNumAspects; ++a) {
      std::array<double, kNumLabels> scores{};
      for (std::size_t l = 0; l < kNumLabels; ++l) {
        const auto& h = model_.aspect_heads[a][l];
        scores[l] = h.intercept + sparse_dot(row, h.weights);
      }
      s.aspects[a] = argmax_label(scores);
    }
  }
  s.scorer_id = id();
  s.scorer_version = version();
  return s;
}

namespace {
nlohmann::ordered_json head_json(const LinearHead& h) {
  nlohmann::ordered_json j;
  j["intercept"] = h.intercept;
  j["weights"] = std::vector<double>(h.weights.data(), h.weights.data() + h.weights.size());
  return j;
}
LinearHead head_from_json(const nlohmann::json& j, std::size_t p) {
  LinearHead h;
  h.intercept = j.at("intercept").get<double>();
  auto w = j.at("weights").get<std::vector<double>>();
  if (w.size() != p) throw data_error("BoW head weight length differs from vocabulary size");
  h.weights = Eigen::Map<Eigen::VectorXd>(w.data(), static_cast<Eigen::Index>(w.size()));
  return h;
}
}  // namespace

nlohmann::ordered_json BowScorer::to_json() const {
  nlohmann::ordered_json j;
  j["format"] = "certkit-bow/1";
  j["ridge_penalty"] = model_.ridge_penalty;
  j["vocabulary"] = model_.vocabulary;
  j["sentence"] = head_json(model_.sentence);
  if (!model_.aspect_heads.empty()) {
    nlohmann::ordered_json aspects;
    for (auto a : corpus::kAllAspects) {
      nlohmann::ordered_json per;
      for (std::size_t l = 0; l < kNumLabels; ++l)
        per[std::string(corpus::to_string(static_cast<AspectLabel>(l)))] =
            head_json(model_.aspect_heads[static_cast<int>(a)][l]);
      aspects[std::string(corpus::to_string(a))] = per;
    }
    j["aspects"] = aspects;
  }
  return j;
}

BowScorer BowScorer::from_json(const nlohmann::json& j) {
  if (j.value("format", "") != "certkit-bow/1") throw data_error("not a BoW model file");
  BowModel m;
  m.ridge_penalty = j.at("ridge_penalty").get<double>();
  m.vocabulary = j.at("vocabulary").get<std::vector<std::string>>();
  m.rebuild_index();
  m.sentence = head_from_json(j.at("sentence"), m.vocabulary.size());
  if (j.contains("aspects")) {
    m.aspect_heads.resize(kNumAspects);
    for (auto a : corpus::kAllAspects) {
      const auto& per = j.at("aspects").at(std::string(corpus::to_string(a)));
      for (std::size_t l = 0; l < kNumLabels; ++l)
        m.aspect_heads[static_cast<int>(a)][l] = head_from_json(
            per.at(std::string(corpus::to_string(static_cast<AspectLabel>(l)))), m.vocabulary.size());
    }
  }
  return BowScorer(std::move(m));
}

}  // namespace certkit::scoring
