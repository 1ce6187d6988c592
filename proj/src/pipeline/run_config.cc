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

#include "ideonaut/pipeline/run_config.h"

#include <string>

#include "ideonaut/error.h"
#include "ideonaut/hashing.h"

namespace ideonaut {

using nlohmann::json;

std::string_view ToString(StopRule rule) {
  switch (rule) {
    case StopRule::kFixedIterations: return "fixed_iterations";
    case StopRule::kNoNewAccepts: return "no_new_accepts";
  }
  return "unknown";
}

StopRule ParseStopRule(std::string_view name) {
  if (name == "fixed_iterations") return StopRule::kFixedIterations;
  if (name == "no_new_accepts") return StopRule::kNoNewAccepts;
  throw ConfigError("unknown stop rule: " + std::string(name));
}

void RunConfig::Validate() const {
  if (iterations < 1) throw ConfigError("iterations must be >= 1");
  if (originality_threshold < kMinScore || originality_threshold > kMaxScore) {
    throw ConfigError("originality_threshold must be in 1..5");
  }
  if (!seed_texts && seed_count < 1) throw ConfigError("seed_count must be >= 1");
  if (max_tokens < 1) throw ConfigError("max_tokens must be >= 1");
  if (!(dedup_cosine > 0.0 && dedup_cosine <= 1.0)) {
    throw ConfigError("dedup_cosine must be in (0, 1]");
  }
  try {
    strategy.Validate();
    schedule.Validate();
  } catch (const InvalidArgumentError& e) {
    throw ConfigError(e.what());
  }
  encoder.Validate();
  decoder.Validate();
  judge.Validate();
}

void RunConfig::ValidateForRun() const {
  Validate();
  if (!seed_texts && objective.empty()) {
    throw ConfigError("an objective is required when no seeds are given");
  }
}

void RequireKnownKeys(const json& object,
                      std::initializer_list<std::string_view> allowed,
                      std::string_view context) {
  if (!object.is_object()) {
    throw ConfigError(std::string(context) + ": expected an object");
  }
  for (const auto& [key, value] : object.items()) {
    bool known = false;
    for (std::string_view a : allowed) known = known || key == a;
    if (!known) {
      throw ConfigError(std::string(context) + ": unknown key '" + key + "'");
    }
  }
}

json ToJson(const gateway::BackendDescriptor& d) {
  json j{{"endpoint", d.endpoint},
         {"model_name", d.model_name},
         {"timeout_ms", d.timeout.count()},
         {"max_parallel", d.max_parallel},
         {"retry_limit", d.retry_limit}};
  if (d.token_dim) j["token_dim"] = *d.token_dim;
  if (d.unit_norm) j["unit_norm"] = true;
  return j;
}

gateway::BackendDescriptor BackendFromJson(const json& j, gateway::Role role) {
  const std::string context =
      "backends." + std::string(gateway::ToString(role));
  RequireKnownKeys(j, {"endpoint", "model_name", "timeout_ms", "max_parallel",
                       "retry_limit", "token_dim", "unit_norm"},
                   context);
  gateway::BackendDescriptor d;
  d.role = role;
  d.endpoint = j.value("endpoint", d.endpoint);
  d.model_name = j.value("model_name", d.model_name);
  d.timeout = std::chrono::milliseconds(
      j.value("timeout_ms", static_cast<int64_t>(d.timeout.count())));
  d.max_parallel = j.value("max_parallel", d.max_parallel);
  d.retry_limit = j.value("retry_limit", d.retry_limit);
  if (j.contains("token_dim")) d.token_dim = j["token_dim"].get<size_t>();
  d.unit_norm = j.value("unit_norm", false);
  return d;
}

json ToJson(const RunConfig& c) {
  json strategy{{"kind", exploration::ToString(c.strategy.kind)},
                {"lambda_min", c.strategy.lambda_min},
                {"lambda_max", c.strategy.lambda_max}};
  if (c.strategy.sigma) strategy["sigma"] = *c.strategy.sigma;
  if (c.renormalize) strategy["renormalize"] = *c.renormalize;
  json j{{"objective", c.objective},
         {"seed_count", c.seed_count},
         {"strategy", strategy},
         {"schedule",
          {{"expansion_factor", c.schedule.expansion_factor},
           {"stages_per_iteration", c.schedule.stages_per_iteration}}},
         {"iterations", c.iterations},
         {"originality_threshold", c.originality_threshold},
         {"backends",
          {{"encoder", ToJson(c.encoder)},
           {"decoder", ToJson(c.decoder)},
           {"judge", ToJson(c.judge)}}},
         {"projector_path", c.projector_path},
         {"rng_seed", c.rng_seed},
         {"stop", ToString(c.stop)},
         {"decode_instruction", c.decode_instruction},
         {"max_tokens", c.max_tokens},
         {"dedup_cosine", c.dedup_cosine}};
  if (c.seed_texts) j["seed_texts"] = *c.seed_texts;
  return j;
}

RunConfig RunConfigFromJson(const json& j) {
  RequireKnownKeys(j, {"objective", "seed_texts", "seed_count", "strategy",
                       "schedule", "iterations", "originality_threshold",
                       "backends", "projector_path", "rng_seed", "stop",
                       "decode_instruction", "max_tokens", "dedup_cosine"},
                   "config");
  if (!j.contains("rng_seed")) throw ConfigError("config: rng_seed is required");
  RunConfig c;
  try {
    c.objective = j.value("objective", c.objective);
    if (j.contains("seed_texts")) {
      c.seed_texts = j["seed_texts"].get<std::vector<std::string>>();
    }
    c.seed_count = j.value("seed_count", c.seed_count);
    if (j.contains("strategy")) {
      const json& s = j["strategy"];
      RequireKnownKeys(s, {"kind", "lambda_min", "lambda_max", "sigma",
                           "renormalize"},
                       "strategy");
      if (s.contains("kind")) {
        c.strategy.kind =
            exploration::ParseStrategyKind(s["kind"].get<std::string>());
      }
      c.strategy.lambda_min = s.value("lambda_min", c.strategy.lambda_min);
      c.strategy.lambda_max = s.value("lambda_max", c.strategy.lambda_max);
      if (s.contains("sigma")) c.strategy.sigma = s["sigma"].get<double>();
      if (s.contains("renormalize")) c.renormalize = s["renormalize"].get<bool>();
    }
    if (j.contains("schedule")) {
      const json& s = j["schedule"];
      RequireKnownKeys(s, {"expansion_factor", "stages_per_iteration"},
                       "schedule");
      c.schedule.expansion_factor =
          s.value("expansion_factor", c.schedule.expansion_factor);
      c.schedule.stages_per_iteration =
          s.value("stages_per_iteration", c.schedule.stages_per_iteration);
    }
    c.iterations = j.value("iterations", c.iterations);
    c.originality_threshold =
        j.value("originality_threshold", c.originality_threshold);
    if (j.contains("backends")) {
      const json& b = j["backends"];
      RequireKnownKeys(b, {"encoder", "decoder", "judge"}, "backends");
      if (b.contains("encoder")) {
        c.encoder = BackendFromJson(b["encoder"], gateway::Role::kEncoder);
      }
      if (b.contains("decoder")) {
        c.decoder = BackendFromJson(b["decoder"], gateway::Role::kDecoder);
      }
      if (b.contains("judge")) {
        c.judge = BackendFromJson(b["judge"], gateway::Role::kJudge);
      }
    }
    c.projector_path = j.value("projector_path", c.projector_path);
    c.rng_seed = j["rng_seed"].get<uint64_t>();
    if (j.contains("stop")) c.stop = ParseStopRule(j["stop"].get<std::string>());
    c.decode_instruction = j.value("decode_instruction", c.decode_instruction);
    c.max_tokens = j.value("max_tokens", c.max_tokens);
    c.dedup_cosine = j.value("dedup_cosine", c.dedup_cosine);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  } catch (const InvalidArgumentError& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  return c;
}

std::string ConfigHash(const RunConfig& config) {
  return HexU64(Fnv1a64(ToJson(config).dump()));
}

}  // namespace ideonaut
