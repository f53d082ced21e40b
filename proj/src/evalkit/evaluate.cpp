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

#include "evalkit/evaluate.hpp"

#include "evalkit/metrics.hpp"

namespace certkit::evalkit {

namespace {
std::pair<std::vector<double>, std::vector<double>> paired(
    const std::vector<std::string>& ids, const std::map<std::string, double>& predicted,
    const std::map<std::string, corpus::GoldLabel>& gold) {
  std::vector<double> p, g;
  for (const auto& id : ids) {
    auto pi = predicted.find(id);
    auto gi = gold.find(id);
    if (pi == predicted.end() || gi == gold.end() || !gi->second.sentence) continue;
    p.push_back(pi->second);
    g.push_back(*gi->second.sentence);
  }
  return {p, g};
}
}  // namespace

SentenceEval evaluate_sentence(const std::map<std::string, double>& predicted,
                               const std::map<std::string, corpus::GoldLabel>& gold,
                               const SplitSpec& split) {
  SentenceEval out;
  auto [pf, gf] = paired(split.evaluation_ids(), predicted, gold);
  out.n_full = pf.size();
  out.r_full_test = pearson_r(pf, gf);
  auto [pr, gr] = paired(split.random_test, predicted, gold);
  out.n_random = pr.size();
  out.r_random_set = pearson_r(pr, gr);
  return out;
}

AspectEval evaluate_aspects(const std::map<std::string, corpus::AspectLabels>& predicted,
                            const std::map<std::string, corpus::GoldLabel>& gold,
                            const std::vector<std::string>& ids) {
  std::array<std::vector<corpus::AspectLabel>, corpus::kNumAspects> g, p;
  AspectEval out;
  for (const auto& id : ids) {
    auto pi = predicted.find(id);
    auto gi = gold.find(id);
    if (pi == predicted.end() || gi == gold.end() || !gi->second.aspects) continue;
    ++out.n;
    for (std::size_t a = 0; a < corpus::kNumAspects; ++a) {
      g[a].push_back((*gi->second.aspects)[a]);
      p[a].push_back(pi->second[a]);
    }
  }
  double sum = 0;
  for (auto aspect : corpus::kAllAspects) {
    const auto a = static_cast<std::size_t>(aspect);
    for (auto label : {corpus::AspectLabel::kCertain, corpus::AspectLabel::kUncertain}) {
      const auto c = one_vs_rest<corpus::AspectLabel>(g[a], p[a], label);
      out.cells.push_back({aspect, label, f1_from(c), c.tp + c.fn});
      sum += out.cells.back().f1;
    }
  }
  out.mean_f1 = sum / static_cast<double>(out.cells.size());
  return out;
}

std::map<std::string, scoring::CertaintyScore> index_scores(
    const std::vector<scoring::CertaintyScore>& scores) {
  std::map<std::string, scoring::CertaintyScore> out;
  for (const auto& s : scores) out.emplace(s.finding_id, s);
  return out;
}

}  // namespace certkit::evalkit
