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

#include "ideonaut/gateway/backend.h"

#include <string>

#include "ideonaut/error.h"

namespace ideonaut::gateway {

std::string_view ToString(Role role) {
  switch (role) {
    case Role::kEncoder: return "encoder";
    case Role::kDecoder: return "decoder";
    case Role::kJudge: return "judge";
  }
  return "unknown";
}

void BackendDescriptor::Validate() const {
  const std::string who(ToString(role));
  if (endpoint.empty()) throw ConfigError(who + ": endpoint is empty");
  if (max_parallel < 1) throw ConfigError(who + ": max_parallel must be >= 1");
  if (timeout.count() <= 0) throw ConfigError(who + ": timeout must be > 0");
  if (retry_limit < 0) throw ConfigError(who + ": retry_limit must be >= 0");
}

std::vector<Embedding> EncodeTexts(Encoder& encoder,
                                   std::span<const std::string> texts) {
  if (texts.empty()) throw InvalidArgumentError("nothing to encode");
  std::vector<Embedding> out = encoder.Encode(texts);
  if (out.size() != texts.size()) {
    throw BackendError("encoder returned " + std::to_string(out.size()) +
                       " embeddings for " + std::to_string(texts.size()) +
                       " texts");
  }
  for (const Embedding& e : out) {
    if (e.empty() || e.dim() != out.front().dim()) {
      throw BackendError("encoder returned inconsistent dimensions");
    }
  }
  return out;
}

std::string DecodeLatent(Decoder& decoder, const DecodeRequest& request) {
  if (request.max_tokens < 1) {
    throw InvalidArgumentError("max_tokens must be positive");
  }
  if (const auto m = decoder.token_dim();
      m && *m != request.projected.values.size()) {
    throw InvalidArgumentError(
        "projected latent has " +
        std::to_string(request.projected.values.size()) +
        " values, decoder expects " + std::to_string(*m));
  }
  std::string text = decoder.DecodeLatent(request);
  if (text.empty()) throw BackendError("empty generation");
  return text;
}

ScoreCard JudgeIdea(Judge& judge, std::string_view idea,
                    std::string_view objective) {
  if (idea.empty()) throw InvalidArgumentError("idea text is empty");
  ScoreCard card = judge.Score(idea, objective);
  try {
    card.Validate();
  } catch (const InvalidArgumentError& e) {
    throw ScoringError(e.what());
  }
  return card;
}

}  // namespace ideonaut::gateway
