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

#ifndef IDEONAUT_PIPELINE_IDEA_RECORD_H_
#define IDEONAUT_PIPELINE_IDEA_RECORD_H_

#include <optional>
#include <string>
#include <string_view>

#include "ideonaut/eval/score_card.h"
#include "ideonaut/exploration/strategy.h"
#include "ideonaut/latent/embedding.h"

namespace ideonaut {

enum class RecordStatus {
  kSeed,
  kAccepted,
  kRejected,
  // Passed the accept rule but repeats an idea already in the manifold.
  kDuplicate,
  kDecodeFailed,
  kJudgeFailed,
};

std::string_view ToString(RecordStatus status);
RecordStatus ParseRecordStatus(std::string_view name);

// One idea with its full provenance. Candidates that failed decoding or
// judging stay in the ledger with `failure` set.
struct IdeaRecord {
  std::string id;
  // Benchmark task the idea belongs to; empty outside the bench harness.
  std::string task_id;
  std::string text;
  // Encoder embedding of `text`; empty until the text has been encoded.
  Embedding embedding;
  // Explorer output before projection; absent for seeds.
  std::optional<Embedding> latent;
  exploration::Provenance provenance;
  int iteration = 0;
  int stage = 0;
  std::optional<ScoreCard> scores;
  bool accepted = false;
  RecordStatus status = RecordStatus::kSeed;
  std::string failure;

  // Throws InvariantError when provenance or acceptance is inconsistent.
  void Validate(int originality_threshold) const;
};

}  // namespace ideonaut

#endif  // IDEONAUT_PIPELINE_IDEA_RECORD_H_
