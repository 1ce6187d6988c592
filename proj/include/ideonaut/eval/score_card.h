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

#ifndef IDEONAUT_EVAL_SCORE_CARD_H_
#define IDEONAUT_EVAL_SCORE_CARD_H_

#include <string>

namespace ideonaut {

inline constexpr int kMinScore = 1;
inline constexpr int kMaxScore = 5;
inline constexpr int kDefaultOriginalityThreshold = 4;

// Judge verdict for one idea.
struct ScoreCard {
  int originality = kMinScore;
  bool relevant = false;
  int elaboration = kMinScore;
  std::string category;

  // Throws InvalidArgumentError("score out of range") on a bad scale value.
  void Validate() const;

  friend bool operator==(const ScoreCard&, const ScoreCard&) = default;
};

}  // namespace ideonaut

#endif  // IDEONAUT_EVAL_SCORE_CARD_H_
