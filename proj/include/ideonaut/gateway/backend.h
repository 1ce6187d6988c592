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

#ifndef IDEONAUT_GATEWAY_BACKEND_H_
#define IDEONAUT_GATEWAY_BACKEND_H_

#include <chrono>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ideonaut/eval/score_card.h"
#include "ideonaut/latent/embedding.h"
#include "ideonaut/projector/projector.h"

namespace ideonaut::gateway {

enum class Role { kEncoder, kDecoder, kJudge };

std::string_view ToString(Role role);

// Endpoints starting with this prefix select the in-process mock world.
inline constexpr std::string_view kMockEndpoint = "mock:";

struct BackendDescriptor {
  Role role = Role::kEncoder;
  std::string endpoint = std::string(kMockEndpoint);
  std::string model_name;
  std::chrono::milliseconds timeout{30000};
  int max_parallel = 4;
  int retry_limit = 2;
  // Declarations for remote backends: the decoder's token-embedding width
  // and whether the encoder emits unit-norm vectors.
  std::optional<size_t> token_dim;
  bool unit_norm = false;

  bool is_mock() const { return endpoint.starts_with(kMockEndpoint); }
  void Validate() const;
};

struct DecodeRequest {
  projector::ProjectedLatent projected;
  // Paraphrase prompt wrapped around the soft token.
  std::string instruction;
  int max_tokens = 64;
};

inline constexpr std::string_view kDefaultDecodeInstruction =
    "Paraphrase the idea carried by [X] as one concise, self-contained idea.";

class Encoder {
 public:
  virtual ~Encoder() = default;
  virtual std::vector<Embedding> Encode(std::span<const std::string> texts) = 0;
  // True when every output has unit norm; turns exploration renormalization
  // on by default.
  virtual bool unit_norm() const = 0;
};

class Decoder {
 public:
  virtual ~Decoder() = default;
  // Soft-token mode: decode text from a projected latent.
  virtual std::string DecodeLatent(const DecodeRequest& request) = 0;
  // Plain prompt mode, used for seed generation.
  virtual std::string Generate(std::string_view instruction, int max_tokens) = 0;
  // Token-embedding width m, when the backend declares it.
  virtual std::optional<size_t> token_dim() const = 0;
};

class Judge {
 public:
  virtual ~Judge() = default;
  virtual ScoreCard Score(std::string_view idea, std::string_view objective) = 0;
};

struct Backends {
  std::shared_ptr<Encoder> encoder;
  std::shared_ptr<Decoder> decoder;
  std::shared_ptr<Judge> judge;
  BackendDescriptor encoder_desc{.role = Role::kEncoder};
  BackendDescriptor decoder_desc{.role = Role::kDecoder};
  BackendDescriptor judge_desc{.role = Role::kJudge};
};

// Contract-checking entry points used by the pipeline.

// One embedding per text, all the same dimension. Throws
// InvalidArgumentError("nothing to encode") on an empty list and
// BackendError on a count or dimension disagreement.
std::vector<Embedding> EncodeTexts(Encoder& encoder,
                                   std::span<const std::string> texts);

// Throws BackendError on an empty generation.
std::string DecodeLatent(Decoder& decoder, const DecodeRequest& request);

// Validates the returned card; a bad card surfaces as ScoringError.
ScoreCard JudgeIdea(Judge& judge, std::string_view idea,
                    std::string_view objective);

}  // namespace ideonaut::gateway

#endif  // IDEONAUT_GATEWAY_BACKEND_H_
