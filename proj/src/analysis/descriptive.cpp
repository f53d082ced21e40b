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

#include "analysis/descriptive.hpp"

#include <cmath>
#include <limits>

#include "common/error.hpp"
#include "evalkit/metrics.hpp"

namespace certkit::analysis {

HedgeCurve hedge_certainty_curve(std::span<const std::pair<std::size_t, double>> hedges_and_gold) {
  std::vector<double> x;
  std::vector<double> y;
  std::map<std::size_t, std::pair<std::size_t, double>> groups;
  for (const auto& [h, g] : hedges_and_gold) {
    x.push_back(static_cast<double>(h));
    y.push_back(g);
    auto& grp = groups[h];
    ++grp.first;
    grp.second += g;
  }
  HedgeCurve curve;
  curve.r = evalkit::pearson_r(x, y);
  curve.n = x.size();
  for (const auto& [h, grp] : groups)
    curve.points.push_back({h, grp.first, grp.second / static_cast<double>(grp.first)});
  return curve;
}

HedgeCurve hedge_certainty_curve(const std::vector<corpus::ScientificFinding>& findings,
                                 const std::map<std::string, corpus::GoldLabel>& gold,
                                 const lexicon::Lexicon& hedges) {
  std::vector<std::pair<std::size_t, double>> pts;
  for (const auto& f : findings) {
    auto it = gold.find(f.finding_id);
    if (it == gold.end() || !it->second.sentence) continue;
    pts.emplace_back(lexicon::count_hedges(f.text, hedges), *it->second.sentence);
  }
  return hedge_certainty_curve(pts);
}

Association aspect_sentence_association(
    std::span<const std::pair<double, corpus::AspectLabels>> items) {
  if (items.empty()) throw data_error("aspect association: no findings with both label levels");
  Association out;
  out.n = items.size();
  double total = 0.0;
  for (const auto& it : items) total += it.first;
  out.corpus_mean = total / static_cast<double>(items.size());

  for (std::size_t a = 0; a < corpus::kNumAspects; ++a) {
    for (auto label : {corpus::AspectLabel::kCertain, corpus::AspectLabel::kUncertain}) {
      AssociationCell cell;
      cell.aspect = corpus::kAllAspects[a];
      cell.label = label;
      double sum = 0.0;
      double sq = 0.0;
      for (const auto& [score, labels] : items) {
        if (labels[a] != label) continue;
        ++cell.n;
        sum += score;
      }
      if (cell.n == 0) {
        cell.omitted = true;
        cell.mean = cell.ci_lo = cell.ci_hi = cell.relative =
            std::numeric_limits<double>::quiet_NaN();
        out.cells.push_back(cell);
        continue;
      }
      const auto n = static_cast<double>(cell.n);
      cell.mean = sum / n;
      for (const auto& [score, labels] : items)
        if (labels[a] == label) sq += (score - cell.mean) * (score - cell.mean);
      if (cell.n >= 2) {
        const double half = 1.96 * std::sqrt(sq / (n - 1.0)) / std::sqrt(n);
        cell.ci_lo = cell.mean - half;
        cell.ci_hi = cell.mean + half;
      } else {
        cell.ci_lo = cell.ci_hi = std::numeric_limits<double>::quiet_NaN();
      }
      cell.relative = cell.mean - out.corpus_mean;
      out.cells.push_back(cell);
    }
  }
  return out;
}

Association aspect_sentence_association(const std::map<std::string, corpus::GoldLabel>& gold) {
  std::vector<std::pair<double, corpus::AspectLabels>> items;
  for (const auto& [id, g] : gold)
    if (g.sentence && g.aspects) items.emplace_back(*g.sentence, *g.aspects);
  return aspect_sentence_association(items);
}

}  // namespace certkit::analysis
