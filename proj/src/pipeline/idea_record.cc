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

#include "ideonaut/pipeline/idea_record.h"

#include <string>

#include "ideonaut/error.h"
#include "ideonaut/eval/metrics.h"

namespace ideonaut {

std::string_view ToString(RecordStatus status) {
  switch (status) {
    case RecordStatus::kSeed: return "seed";
    case RecordStatus::kAccepted: return "accepted";
    case RecordStatus::kRejected: return "rejected";
    case RecordStatus::kDuplicate: return "duplicate";
    case RecordStatus::kDecodeFailed: return "decode_failed";
    case RecordStatus::kJudgeFailed: return "judge_failed";
  }
  return "unknown";
}

RecordStatus ParseRecordStatus(std::string_view name) {
  for (RecordStatus s :
       {RecordStatus::kSeed, RecordStatus::kAccepted, RecordStatus::kRejected,
        RecordStatus::kDuplicate, RecordStatus::kDecodeFailed,
        RecordStatus::kJudgeFailed}) {
    if (ToString(s) == name) return s;
  }
  throw FormatError("unknown record status: " + std::string(name));
}

void IdeaRecord::Validate(int originality_threshold) const {
  const auto fail = [this](const std::string& what) {
    throw InvariantError("record " + id + ": " + what);
  };
  const auto& p = provenance;
  switch (p.origin) {
    case exploration::Origin::kSeed:
      if (!p.parents.empty()) fail("seed with parents");
      break;
    case exploration::Origin::kInterpolation:
    case exploration::Origin::kExtrapolation:
      if (p.parents.size() != 2 || !p.lambda) fail("blend provenance incomplete");
      break;
    case exploration::Origin::kNoise:
      if (p.parents.size() != 1 || !p.sigma) fail("noise provenance incomplete");
      break;
  }
  if (accepted) {
    if (!scores) fail("accepted without scores");
    if (!eval::Accept(*scores, originality_threshold)) {
      fail("accepted card fails the accept rule");
    }
  }
}

}  // namespace ideonaut
