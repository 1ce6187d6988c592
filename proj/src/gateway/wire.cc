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

#include "ideonaut/gateway/wire.h"

#include <array>
#include <bit>
#include <cstdint>
#include <json.hpp>
#include <semaphore>
#include <string>

#include "ideonaut/error.h"

namespace ideonaut::gateway {
namespace {

using nlohmann::json;

constexpr std::string_view kAlphabet =
    "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";

HttpReply JsonReply(int status, const json& body) {
  return HttpReply{status, body.dump()};
}

HttpReply ErrorReply(int status, std::string_view message) {
  return JsonReply(status, json{{"error", message}});
}

// Thrown inside the handler for 400-class problems.
struct BadRequest {
  std::string message;
};

const json& Require(const json& body, const char* key) {
  if (!body.is_object() || !body.contains(key)) {
    throw BadRequest{std::string("missing field: ") + key};
  }
  return body.at(key);
}

std::string RequireString(const json& body, const char* key) {
  const json& v = Require(body, key);
  if (!v.is_string()) throw BadRequest{std::string(key) + " must be a string"};
  return v.get<std::string>();
}

HttpReply HandleEncode(const Backends& backends, const json& body) {
  const json& texts_json = Require(body, "texts");
  if (!texts_json.is_array()) throw BadRequest{"texts must be an array"};
  std::vector<std::string> texts;
  for (const json& t : texts_json) {
    if (!t.is_string()) throw BadRequest{"texts must contain strings"};
    texts.push_back(t.get<std::string>());
  }
  if (texts.empty()) throw BadRequest{"nothing to encode"};
  const std::vector<Embedding> embeddings =
      EncodeTexts(*backends.encoder, texts);
  json rows = json::array();
  for (const Embedding& e : embeddings) {
    rows.push_back(std::vector<double>(e.values().begin(), e.values().end()));
  }
  return JsonReply(200, json{{"dim", embeddings.front().dim()},
                             {"embeddings", std::move(rows)}});
}

HttpReply HandleDecode(const Backends& backends, const json& body) {
  const std::string instruction = RequireString(body, "instruction");
  const json& max_tokens_json = Require(body, "max_tokens");
  if (!max_tokens_json.is_number_integer() || max_tokens_json.get<int>() < 1) {
    throw BadRequest{"max_tokens must be a positive integer"};
  }
  const int max_tokens = max_tokens_json.get<int>();
  if (!body.contains("latent_b64")) {
    std::string text = backends.decoder->Generate(instruction, max_tokens);
    if (text.empty()) throw BackendError("empty generation");
    return JsonReply(200, json{{"text", text}});
  }
  DecodeRequest request;
  request.instruction = instruction;
  request.max_tokens = max_tokens;
  try {
    request.projected.values =
        DecodeLatentB64(RequireString(body, "latent_b64"));
  } catch (const FormatError& e) {
    throw BadRequest{e.what()};
  }
  if (const auto m = backends.decoder->token_dim();
      m && *m != request.projected.values.size()) {
    throw BadRequest{"dimension mismatch: latent has " +
                     std::to_string(request.projected.values.size()) +
                     " values, decoder expects " + std::to_string(*m)};
  }
  return JsonReply(200,
                   json{{"text", DecodeLatent(*backends.decoder, request)}});
}

HttpReply HandleJudge(const Backends& backends, const json& body) {
  const std::string idea = RequireString(body, "idea");
  const std::string objective = RequireString(body, "objective");
  if (idea.empty()) throw BadRequest{"idea is empty"};
  if (body.contains("rubric_version") &&
      body.at("rubric_version") != json(kRubricVersion)) {
    throw BadRequest{"unsupported rubric_version"};
  }
  const ScoreCard card = JudgeIdea(*backends.judge, idea, objective);
  return JsonReply(200, json{{"originality", card.originality},
                             {"relevant", card.relevant},
                             {"elaboration", card.elaboration},
                             {"category", card.category}});
}

std::string ErrorMessage(const HttpReply& reply) {
  const json body = json::parse(reply.body, nullptr, false);
  if (body.is_object() && body.contains("error") && body["error"].is_string()) {
    return body["error"].get<std::string>();
  }
  return reply.body;
}

class SlotGuard {
 public:
  explicit SlotGuard(std::counting_semaphore<>& slots) : slots_(slots) {
    slots_.acquire();
  }
  ~SlotGuard() { slots_.release(); }
  SlotGuard(const SlotGuard&) = delete;
  SlotGuard& operator=(const SlotGuard&) = delete;

 private:
  std::counting_semaphore<>& slots_;
};

}  // namespace

std::string Base64Encode(std::string_view bytes) {
  std::string out;
  out.reserve((bytes.size() + 2) / 3 * 4);
  size_t i = 0;
  for (; i + 2 < bytes.size(); i += 3) {
    const uint32_t n = (uint32_t{static_cast<unsigned char>(bytes[i])} << 16) |
                       (uint32_t{static_cast<unsigned char>(bytes[i + 1])} << 8) |
                       uint32_t{static_cast<unsigned char>(bytes[i + 2])};
    out += kAlphabet[(n >> 18) & 63];
    out += kAlphabet[(n >> 12) & 63];
    out += kAlphabet[(n >> 6) & 63];
    out += kAlphabet[n & 63];
  }
  const size_t rest = bytes.size() - i;
  if (rest > 0) {
    uint32_t n = uint32_t{static_cast<unsigned char>(bytes[i])} << 16;
    if (rest == 2) n |= uint32_t{static_cast<unsigned char>(bytes[i + 1])} << 8;
    out += kAlphabet[(n >> 18) & 63];
    out += kAlphabet[(n >> 12) & 63];
    out += rest == 2 ? kAlphabet[(n >> 6) & 63] : '=';
    out += '=';
  }
  return out;
}

std::string Base64Decode(std::string_view text) {
  if (text.size() % 4 != 0) throw FormatError("base64 length not a multiple of 4");
  std::array<int, 256> lookup;
  lookup.fill(-1);
  for (size_t k = 0; k < kAlphabet.size(); ++k) {
    lookup[static_cast<unsigned char>(kAlphabet[k])] = static_cast<int>(k);
  }
  std::string out;
  out.reserve(text.size() / 4 * 3);
  for (size_t i = 0; i < text.size(); i += 4) {
    const bool last = i + 4 == text.size();
    int pad = 0;
    uint32_t n = 0;
    for (size_t k = 0; k < 4; ++k) {
      const char c = text[i + k];
      if (c == '=' && last && k >= 2) {
        ++pad;
        n <<= 6;
        continue;
      }
      const int v = lookup[static_cast<unsigned char>(c)];
      if (v < 0 || pad > 0) throw FormatError("invalid base64");
      n = (n << 6) | static_cast<uint32_t>(v);
    }
    out += static_cast<char>((n >> 16) & 0xff);
    if (pad < 2) out += static_cast<char>((n >> 8) & 0xff);
    if (pad < 1) out += static_cast<char>(n & 0xff);
  }
  return out;
}

std::string EncodeLatentB64(std::span<const double> values) {
  std::string bytes;
  bytes.reserve(values.size() * 4);
  for (double v : values) {
    const uint32_t bits = std::bit_cast<uint32_t>(static_cast<float>(v));
    for (int k = 0; k < 4; ++k) bytes += static_cast<char>((bits >> (8 * k)) & 0xff);
  }
  return Base64Encode(bytes);
}

std::vector<double> DecodeLatentB64(std::string_view b64) {
  const std::string bytes = Base64Decode(b64);
  if (bytes.size() % 4 != 0) {
    throw FormatError("latent byte length not a multiple of 4");
  }
  std::vector<double> values;
  values.reserve(bytes.size() / 4);
  for (size_t i = 0; i < bytes.size(); i += 4) {
    uint32_t bits = 0;
    for (int k = 0; k < 4; ++k) {
      bits |= uint32_t{static_cast<unsigned char>(bytes[i + k])} << (8 * k);
    }
    values.push_back(std::bit_cast<float>(bits));
  }
  return values;
}

HttpReply HandleWireRequest(const Backends& backends, std::string_view path,
                            const std::string& body) {
  if (path == kHealthPath) return JsonReply(200, json{{"status", "ok"}});
  const json request = json::parse(body, nullptr, false);
  if (request.is_discarded()) return ErrorReply(400, "body is not valid JSON");
  try {
    if (path == kEncodePath) return HandleEncode(backends, request);
    if (path == kDecodePath) return HandleDecode(backends, request);
    if (path == kJudgePath) return HandleJudge(backends, request);
    return ErrorReply(404, "unknown path: " + std::string(path));
  } catch (const BadRequest& e) {
    return ErrorReply(400, e.message);
  } catch (const InvalidArgumentError& e) {
    return ErrorReply(400, e.what());
  } catch (const std::exception& e) {
    return ErrorReply(500, e.what());
  }
}

// Shared request plumbing for the remote clients.
struct RemoteChannel {
  RemoteChannel(BackendDescriptor d, std::shared_ptr<Transport> t)
      : descriptor(std::move(d)),
        transport(std::move(t)),
        slots(descriptor.max_parallel) {
    descriptor.Validate();
    if (!transport) throw InvalidArgumentError("null transport");
  }

  json Call(std::string_view path, const json& request) {
    const std::string body = request.dump();
    const std::string who(ToString(descriptor.role));
    std::string last_error;
    for (int attempt = 0; attempt <= descriptor.retry_limit; ++attempt) {
      HttpReply reply;
      try {
        SlotGuard guard(slots);
        reply = transport->Post(path, body);
      } catch (const BackendError& e) {
        last_error = e.what();
        continue;
      }
      if (reply.status >= 200 && reply.status < 300) {
        json parsed = json::parse(reply.body, nullptr, false);
        if (!parsed.is_discarded()) return parsed;
        last_error = "reply is not valid JSON";
        continue;
      }
      if (reply.status >= 500) {
        last_error = "HTTP " + std::to_string(reply.status) + ": " +
                     ErrorMessage(reply);
        continue;
      }
      throw BackendError(who + " rejected request (HTTP " +
                         std::to_string(reply.status) +
                         "): " + ErrorMessage(reply));
    }
    throw BackendError(who + " failed after " +
                       std::to_string(descriptor.retry_limit + 1) +
                       " attempts: " + last_error);
  }

  BackendDescriptor descriptor;
  std::shared_ptr<Transport> transport;
  std::counting_semaphore<> slots;
};

struct RemoteEncoder::Channel : RemoteChannel {
  using RemoteChannel::RemoteChannel;
};
struct RemoteDecoder::Channel : RemoteChannel {
  using RemoteChannel::RemoteChannel;
};
struct RemoteJudge::Channel : RemoteChannel {
  using RemoteChannel::RemoteChannel;
};

RemoteEncoder::RemoteEncoder(BackendDescriptor descriptor,
                             std::shared_ptr<Transport> transport,
                             bool unit_norm)
    : channel_(std::make_unique<Channel>(std::move(descriptor),
                                         std::move(transport))),
      unit_norm_(unit_norm) {}

RemoteEncoder::~RemoteEncoder() = default;

std::vector<Embedding> RemoteEncoder::Encode(
    std::span<const std::string> texts) {
  const json reply = channel_->Call(
      kEncodePath, json{{"texts", std::vector<std::string>(texts.begin(),
                                                           texts.end())}});
  try {
    const size_t dim = reply.at("dim").get<size_t>();
    std::vector<Embedding> out;
    for (const json& row : reply.at("embeddings")) {
      auto values = row.get<std::vector<double>>();
      if (values.size() != dim) {
        throw BackendError("encoder reply disagrees with its declared dim");
      }
      out.emplace_back(std::move(values));
    }
    return out;
  } catch (const json::exception& e) {
    throw BackendError(std::string("malformed encoder reply: ") + e.what());
  } catch (const InvalidArgumentError& e) {
    throw BackendError(std::string("malformed encoder reply: ") + e.what());
  }
}

RemoteDecoder::RemoteDecoder(BackendDescriptor descriptor,
                             std::shared_ptr<Transport> transport,
                             std::optional<size_t> token_dim)
    : channel_(std::make_unique<Channel>(std::move(descriptor),
                                         std::move(transport))),
      token_dim_(token_dim) {}

RemoteDecoder::~RemoteDecoder() = default;

namespace {

std::string TextField(const json& reply) {
  if (!reply.is_object() || !reply.contains("text") ||
      !reply["text"].is_string()) {
    throw BackendError("malformed decoder reply");
  }
  return reply["text"].get<std::string>();
}

}  // namespace

std::string RemoteDecoder::DecodeLatent(const DecodeRequest& request) {
  return TextField(channel_->Call(
      kDecodePath,
      json{{"latent_b64", EncodeLatentB64(request.projected.values)},
           {"instruction", request.instruction},
           {"max_tokens", request.max_tokens}}));
}

std::string RemoteDecoder::Generate(std::string_view instruction,
                                    int max_tokens) {
  return TextField(channel_->Call(
      kDecodePath,
      json{{"instruction", instruction}, {"max_tokens", max_tokens}}));
}

RemoteJudge::RemoteJudge(BackendDescriptor descriptor,
                         std::shared_ptr<Transport> transport)
    : channel_(std::make_unique<Channel>(std::move(descriptor),
                                         std::move(transport))) {}

RemoteJudge::~RemoteJudge() = default;

namespace {

std::optional<ScoreCard> CardFromJson(const json& reply, std::string* why) {
  try {
    ScoreCard card;
    card.originality = reply.at("originality").get<int>();
    card.relevant = reply.at("relevant").get<bool>();
    card.elaboration = reply.at("elaboration").get<int>();
    card.category = reply.at("category").get<std::string>();
    card.Validate();
    return card;
  } catch (const std::exception& e) {
    *why = e.what();
    return std::nullopt;
  }
}

}  // namespace

ScoreCard RemoteJudge::Score(std::string_view idea,
                             std::string_view objective) {
  const json request{{"idea", idea},
                     {"objective", objective},
                     {"rubric_version", kRubricVersion}};
  std::string why;
  for (int attempt = 0; attempt < 2; ++attempt) {
    if (auto card = CardFromJson(channel_->Call(kJudgePath, request), &why)) {
      return *card;
    }
  }
  throw ScoringError("unparseable judge reply: " + why);
}

}  // namespace ideonaut::gateway
