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

#include "corpus/annotations.hpp"

#include <set>

namespace certkit::corpus {

AspectLabel majority_label(std::span<const AspectLabel> votes, const TiePriority& ties) {
  std::array<std::size_t, kNumLabels> counts{};
  for (auto v : votes) ++counts[static_cast<int>(v)];
  AspectLabel best = ties[0];
  std::size_t best_count = counts[static_cast<int>(best)];
  for (std::size_t i = 1; i < ties.size(); ++i) {
    const auto c = counts[static_cast<int>(ties[i])];
    if (c > best_count) {
      best = ties[i];
      best_count = c;
    }
  }
  return best;
}

AggregationResult aggregate_annotations(std::span<const AnnotationRecord> records,
                                        const TiePriority& ties) {
  struct Pending {
    std::set<std::string> annotators;
    std::set<std::string> bad_text_annotators;
    std::vector<int> likerts;
    std::vector<AspectLabels> aspects;
  };
  std::map<std::string, Pending> by_finding;
  for (const auto& r : records) {
    auto& p = by_finding[r.finding_id];
    p.annotators.insert(r.annotator_id);
    switch (r.kind) {
      case AnnotationKind::kBadText: p.bad_text_annotators.insert(r.annotator_id); break;
      case AnnotationKind::kSentenceLevel: p.likerts.push_back(*r.likert); break;
      case AnnotationKind::kAspectLevel: p.aspects.push_back(*r.aspects); break;
    }
  }

  AggregationResult out;
  for (auto& [id, p] : by_finding) {
    if (2 * p.bad_text_annotators.size() > p.annotators.size()) {
      out.excluded_bad_text.push_back(id);
      continue;
    }
    if (p.likerts.empty() && p.aspects.empty()) {
      out.warnings.push_back("finding '" + id + "' has no usable annotations");
      continue;
    }
    GoldLabel g;
    if (!p.likerts.empty()) {
      double sum = 0;
      for (int v : p.likerts) sum += v;
      g.sentence = sum / static_cast<double>(p.likerts.size());
      g.sentence_votes = p.likerts.size();
    }
    if (!p.aspects.empty()) {
      AspectLabels labels{};
      std::vector<AspectLabel> votes(p.aspects.size());
      for (std::size_t a = 0; a < kNumAspects; ++a) {
        for (std::size_t k = 0; k < p.aspects.size(); ++k) votes[k] = p.aspects[k][a];
        labels[a] = majority_label(votes, ties);
      }
      g.aspects = labels;
      g.aspect_votes = p.aspects.size();
    }
    out.gold.emplace(id, g);
  }
  return out;
}

}  // namespace certkit::corpus
