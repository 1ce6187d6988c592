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

#ifndef IDEONAUT_EVAL_METRICS_H_
#define IDEONAUT_EVAL_METRICS_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ideonaut/eval/score_card.h"
#include "ideonaut/latent/embedding.h"
#include "ideonaut/pipeline/idea_record.h"

namespace ideonaut::eval {

// relevant AND originality >= threshold.
bool Accept(const ScoreCard& card,
            int originality_threshold = kDefaultOriginalityThreshold);

inline constexpr double kNearDuplicateCosine = 0.98;

// Case-folds ASCII, trims, and collapses internal whitespace runs to one
// space.
std::string NormalizeText(std::string_view text);

struct DedupItem {
  std::string text;
  // Ideas without an embedding are compared by text only.
  std::optional<Embedding> embedding;
};

// Normalized texts match, or embedding cosine >= threshold.
bool IsDuplicate(const DedupItem& a, const DedupItem& b,
                 double cosine_threshold = kNearDuplicateCosine);

// Greedy first-occurrence dedup: an item is kept unless it duplicates an
// earlier kept item. Returned indices are in input order.
std::vector<size_t> DedupUnique(std::span<const DedupItem> ideas,
                                double cosine_threshold = kNearDuplicateCosine);

struct MetricReport {
  double originality_mean = 0.0;
  double originality_std = 0.0;
  double elaboration_mean = 0.0;
  double elaboration_std = 0.0;
  size_t fluency = 0;
  size_t flexibility = 0;
  size_t responses = 0;

  friend bool operator==(const MetricReport&, const MetricReport&) = default;
};

// Mean and population std of originality/elaboration run over every card.
// Fluency counts the relevant cards among `kept_unique`; flexibility counts
// their distinct categories. Throws InvalidArgumentError on an empty card
// list or an out-of-range index.
MetricReport ComputeMetrics(std::span<const ScoreCard> cards,
                            std::span<const size_t> kept_unique);

struct MeanStd {
  double mean = 0.0;
  double std = 0.0;
};

// Population statistics; throws on empty input.
MeanStd PopulationMeanStd(std::span<const double> values);

// Every baseline record, then each of ours that duplicates neither the
// baseline nor an earlier kept record of ours.
// All records must share one task_id.
std::vector<IdeaRecord> MergeWithBaseline(
    std::span<const IdeaRecord> baseline, std::span<const IdeaRecord> ours,
    double cosine_threshold = kNearDuplicateCosine);

}  // namespace ideonaut::eval

#endif  // IDEONAUT_EVAL_METRICS_H_
