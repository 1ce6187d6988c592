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

#ifndef IDEONAUT_GATEWAY_WIRE_H_
#define IDEONAUT_GATEWAY_WIRE_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ideonaut/gateway/backend.h"
#include "ideonaut/gateway/transport.h"

namespace ideonaut::gateway {

// Endpoint paths of the model wire protocol.
inline constexpr std::string_view kEncodePath = "/v1/encode";
inline constexpr std::string_view kDecodePath = "/v1/decode";
inline constexpr std::string_view kJudgePath = "/v1/judge";
inline constexpr std::string_view kHealthPath = "/v1/health";
inline constexpr std::string_view kRubricVersion = "1";

// Standard base64 with '=' padding.
std::string Base64Encode(std::string_view bytes);
// Throws FormatError on characters outside the alphabet or bad padding.
std::string Base64Decode(std::string_view text);

// Latents travel as base64 of float32 little-endian values.
std::string EncodeLatentB64(std::span<const double> values);
std::vector<double> DecodeLatentB64(std::string_view b64);

// Serves the wire protocol from in-process backends. Schema violations get
// 400, backend failures 500, unknown paths 404; error bodies are
// {"error": "..."}. Stateless: the same request always yields the same reply
// when the backends are deterministic.
HttpReply HandleWireRequest(const Backends& backends, std::string_view path,
                            const std::string& body);

// Remote backends speaking the wire protocol. Each client caps in-flight
// requests at descriptor.max_parallel and retries transport failures and
// 5xx replies up to descriptor.retry_limit times.
class RemoteEncoder final : public Encoder {
 public:
  RemoteEncoder(BackendDescriptor descriptor,
                std::shared_ptr<Transport> transport, bool unit_norm = false);
  ~RemoteEncoder() override;

  std::vector<Embedding> Encode(std::span<const std::string> texts) override;
  bool unit_norm() const override { return unit_norm_; }

 private:
  struct Channel;
  std::unique_ptr<Channel> channel_;
  bool unit_norm_;
};

class RemoteDecoder final : public Decoder {
 public:
  RemoteDecoder(BackendDescriptor descriptor,
                std::shared_ptr<Transport> transport,
                std::optional<size_t> token_dim = std::nullopt);
  ~RemoteDecoder() override;

  std::string DecodeLatent(const DecodeRequest& request) override;
  std::string Generate(std::string_view instruction, int max_tokens) override;
  std::optional<size_t> token_dim() const override { return token_dim_; }

 private:
  struct Channel;
  std::unique_ptr<Channel> channel_;
  std::optional<size_t> token_dim_;
};

class RemoteJudge final : public Judge {
 public:
  RemoteJudge(BackendDescriptor descriptor,
              std::shared_ptr<Transport> transport);
  ~RemoteJudge() override;

  // A reply that does not carry a valid card is retried once, then
  // reported as ScoringError.
  ScoreCard Score(std::string_view idea, std::string_view objective) override;

 private:
  struct Channel;
  std::unique_ptr<Channel> channel_;
};

}  // namespace ideonaut::gateway

#endif  // IDEONAUT_GATEWAY_WIRE_H_
