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

#ifndef IDEONAUT_PIPELINE_RUN_CONFIG_H_
#define IDEONAUT_PIPELINE_RUN_CONFIG_H_

#include <cstdint>
#include <json.hpp>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ideonaut/eval/metrics.h"
#include "ideonaut/exploration/strategy.h"
#include "ideonaut/gateway/backend.h"

namespace ideonaut {

enum class StopRule { kFixedIterations, kNoNewAccepts };

std::string_view ToString(StopRule rule);
StopRule ParseStopRule(std::string_view name);

struct RunConfig {
  // Problem description. When empty, the judge objective is derived from
  // the seed texts.
  std::string objective;
  // Provided seeds skip seed generation entirely.
  std::optional<std::vector<std::string>> seed_texts;
  int seed_count = 8;
  exploration::StrategyConfig strategy;
  // Unset: follow the encoder's unit_norm() declaration.
  std::optional<bool> renormalize;
  exploration::ExpansionSchedule schedule;
  int iterations = 1;
  int originality_threshold = kDefaultOriginalityThreshold;
  gateway::BackendDescriptor encoder{.role = gateway::Role::kEncoder};
  gateway::BackendDescriptor decoder{.role = gateway::Role::kDecoder};
  gateway::BackendDescriptor judge{.role = gateway::Role::kJudge};
  // Empty selects the identity projector.
  std::string projector_path;
  uint64_t rng_seed = 0;
  StopRule stop = StopRule::kFixedIterations;
  std::string decode_instruction = std::string(gateway::kDefaultDecodeInstruction);
  int max_tokens = 64;
  double dedup_cosine = eval::kNearDuplicateCosine;

  // Field checks; throws ConfigError.
  void Validate() const;
  // Validate() plus the requirement that seeds can be obtained: either
  // seed_texts or an objective to generate them from.
  void ValidateForRun() const;
};

// Canonical JSON form; also the input to ConfigHash.
nlohmann::json ToJson(const RunConfig& config);
// Strict: unknown keys are rejected and rng_seed is required.
RunConfig RunConfigFromJson(const nlohmann::json& j);

// FNV-1a of the canonical JSON, as 16 hex digits.
std::string ConfigHash(const RunConfig& config);

// Rejects keys outside `allowed`; `context` prefixes the error message.
void RequireKnownKeys(const nlohmann::json& object,
                      std::initializer_list<std::string_view> allowed,
                      std::string_view context);

nlohmann::json ToJson(const gateway::BackendDescriptor& descriptor);
gateway::BackendDescriptor BackendFromJson(const nlohmann::json& j,
                                           gateway::Role role);

}  // namespace ideonaut

#endif  // IDEONAUT_PIPELINE_RUN_CONFIG_H_
