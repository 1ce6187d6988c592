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

#ifndef IDEONAUT_GATEWAY_JUDGE_REPLY_H_
#define IDEONAUT_GATEWAY_JUDGE_REPLY_H_

#include <string>
#include <string_view>

#include "ideonaut/eval/score_card.h"

namespace ideonaut::gateway {

// Rubric prompt asking a chat model for a key-value verdict.
std::string BuildJudgePrompt(std::string_view idea, std::string_view objective);

// Parses a "key: value" verdict. When the reply contains a ``` fenced block
// only the first block is read. Unknown keys are ignored. Required keys:
// originality, relevant, elaboration, category. Throws ScoringError.
ScoreCard ParseJudgeReply(std::string_view raw);

}  // namespace ideonaut::gateway

#endif  // IDEONAUT_GATEWAY_JUDGE_REPLY_H_
