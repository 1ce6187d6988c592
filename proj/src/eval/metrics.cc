// Copyright 2026 The Ideonaut Authors.
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

#include "ideonaut/eval/metrics.h"

#include <cctype>
#include <cmath>
#include <set>
#include <string>

#include "ideonaut/error.h"
#include "ideonaut/latent/latent_math.h"

namespace ideonaut::eval {

bool Accept(const ScoreCard& card, int originality_threshold) {
  return card.relevant && card.originality >= originality_threshold;
}

std::string NormalizeText(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool pending_space = false;
  for (unsigned char c : text) {
    if (std::isspace(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) {
      out.push_back(' ');
      pending_space = false;
    }
    out.push_back(static_cast<char>(std::tolower(c)));
  }
  return out;
}

namespace {

// Normalized text plus a unit-length copy of the embedding, so each pair
// comparison is a single dot product.
struct Prepared {
  std::string text;
  std::optional<Embedding> unit;
};

Prepared Prepare(const DedupItem& item) {
  Prepared p{NormalizeText(item.text), std::nullopt};
  if (item.embedding && latent::Norm(*item.embedding) > 0.0) {
    p.unit = latent::Renormalize(*item.embedding);
  }
  return p;
}

bool Duplicate(const Prepared& a, const Prepared& b, double threshold) {
  if (a.text == b.text) return true;
  if (!a.unit || !b.unit || a.unit->dim() != b.unit->dim()) return false;
  return latent::Dot(*a.unit, *b.unit) >= threshold;
}

}  // namespace

bool IsDuplicate(const DedupItem& a, const DedupItem& b,
                 double cosine_threshold) {
  return Duplicate(Prepare(a), Prepare(b), cosine_threshold);
}

std::vector<size_t> DedupUnique(std::span<const DedupItem> ideas,
                                double cosine_threshold) {
  std::vector<Prepared> kept_items;
  std::vector<size_t> kept;
  for (size_t i = 0; i < ideas.size(); ++i) {
    Prepared candidate = Prepare(ideas[i]);
    bool duplicate = false;
    for (const Prepared& existing : kept_items) {
      if (Duplicate(existing, candidate, cosine_threshold)) {
        duplicate = true;
        break;
      }
    }
    if (!duplicate) {
      kept.push_back(i);
      kept_items.push_back(std::move(candidate));
    }
  }
  return kept;
}

MeanStd PopulationMeanStd(std::span<const double> values) {
  if (values.empty()) throw InvalidArgumentError("statistics of an empty set");
  double sum = 0.0;
  for (double v : values) sum += v;
  const double mean = sum / static_cast<double>(values.size());
  double sq = 0.0;
  for (double v : values) sq += (v - mean) * (v - mean);
  return {mean, std::sqrt(sq / static_cast<double>(values.size()))};
}

MetricReport ComputeMetrics(std::span<const ScoreCard> cards,
                            std::span<const size_t> kept_unique) {
  if (cards.empty()) {
    throw InvalidArgumentError("metrics undefined for an empty card list");
  }
  std::vector<double> originality;
  std::vector<double> elaboration;
  originality.reserve(cards.size());
  elaboration.reserve(cards.size());
  for (const ScoreCard& card : cards) {
    originality.push_back(card.originality);
    elaboration.push_back(card.elaboration);
  }
  const MeanStd o = PopulationMeanStd(originality);
  const MeanStd e = PopulationMeanStd(elaboration);

  MetricReport report;
  report.originality_mean = o.mean;
  report.originality_std = o.std;
  report.elaboration_mean = e.mean;
  report.elaboration_std = e.std;
  report.responses = cards.size();

  std::set<size_t> seen;
  std::set<std::string> categories;
  for (size_t index : kept_unique) {
    if (index >= cards.size()) {
      throw InvalidArgumentError("kept index out of range");
    }
    if (!seen.insert(index).second || !cards[index].relevant) continue;
    ++report.fluency;
    categories.insert(cards[index].category);
  }
  report.flexibility = categories.size();
  return report;
}

std::vector<IdeaRecord> MergeWithBaseline(std::span<const IdeaRecord> baseline,
                                          std::span<const IdeaRecord> ours,
                                          double cosine_threshold) {
  const IdeaRecord* first = !baseline.empty() ? &baseline.front()
                            : !ours.empty()   ? &ours.front()
                                              : nullptr;
  if (first == nullptr) return {};
  const auto check_task = [first](const IdeaRecord& r) {
    if (r.task_id != first->task_id) {
      throw InvalidArgumentError("task mismatch: '" + r.task_id + "' vs '" +
                                 first->task_id + "'");
    }
  };
  const auto prepare = [](const IdeaRecord& r) {
    return Prepare({r.text, r.embedding.empty()
                                ? std::nullopt
                                : std::optional<Embedding>(r.embedding)});
  };

  std::vector<IdeaRecord> merged;
  std::vector<Prepared> kept;
  for (const IdeaRecord& r : baseline) {
    check_task(r);
    merged.push_back(r);
    kept.push_back(prepare(r));
  }
  for (const IdeaRecord& r : ours) {
    check_task(r);
    Prepared candidate = prepare(r);
    bool duplicate = false;
    for (const Prepared& existing : kept) {
      if (Duplicate(existing, candidate, cosine_threshold)) {
        duplicate = true;
        break;
      }
    }
    if (duplicate) continue;
    merged.push_back(r);
    kept.push_back(std::move(candidate));
  }
  return merged;
}

}  // namespace ideonaut::eval
