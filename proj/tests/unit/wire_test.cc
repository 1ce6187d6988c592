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

#include <doctest.h>
#include <httplib.h>

#include <atomic>
#include <chrono>
#include <json.hpp>
#include <memory>
#include <mutex>
#include <thread>
#include <vector>

#include "ideonaut/error.h"
#include "ideonaut/gateway/backend.h"
#include "ideonaut/gateway/mock_world.h"
#include "ideonaut/gateway/parallel.h"
#include "ideonaut/gateway/transport.h"
#include "ideonaut/gateway/wire.h"

namespace ideonaut::gateway {
namespace {

using nlohmann::json;

std::shared_ptr<const MockWorld> World() {
  static const auto world = std::make_shared<const MockWorld>(
      SynthesizeWorld({.dim = 8, .vocabulary_size = 40}, "Uses for a paperclip",
                      std::vector<std::string>{"Pick a lock", "Reset a router"}));
  return world;
}

Backends MockBackends() { return MakeMockBackends(World()); }

BackendDescriptor Descriptor(Role role, int max_parallel = 4, int retries = 2) {
  return BackendDescriptor{.role = role,
                           .endpoint = "http://unused",
                           .max_parallel = max_parallel,
                           .retry_limit = retries};
}

std::shared_ptr<Transport> InProcess(Backends backends) {
  return std::make_shared<InProcessTransport>(
      [backends](std::string_view path, const std::string& body) {
        return HandleWireRequest(backends, path, body);
      });
}

std::string ErrorOf(const HttpReply& reply) {
  const json j = json::parse(reply.body);
  REQUIRE(j.is_object());
  REQUIRE(j.contains("error"));
  REQUIRE(j["error"].is_string());
  return j["error"].get<std::string>();
}

TEST_CASE("base64 reference vectors") {
  CHECK(Base64Encode("") == "");
  CHECK(Base64Encode("f") == "Zg==");
  CHECK(Base64Encode("fo") == "Zm8=");
  CHECK(Base64Encode("foo") == "Zm9v");
  CHECK(Base64Encode("foobar") == "Zm9vYmFy");
  CHECK(Base64Decode("Zm9vYg==") == "foob");
  CHECK(Base64Decode("Zm9vYmE=") == "fooba");
  CHECK_THROWS_AS(Base64Decode("Zm9"), FormatError);
  CHECK_THROWS_AS(Base64Decode("Zm9*"), FormatError);
  CHECK_THROWS_AS(Base64Decode("Z=9v"), FormatError);
}

TEST_CASE("latent travels as little-endian float32") {
  // 1.0f = 0x3f800000 -> bytes 00 00 80 3f; -2.0f = 0xc0000000.
  CHECK(EncodeLatentB64(std::vector<double>{1.0}) == "AACAPw==");
  CHECK(EncodeLatentB64(std::vector<double>{1.0, -2.0}) == "AACAPwAAAMA=");
  CHECK(DecodeLatentB64("AACAPwAAAMA=") == std::vector<double>{1.0, -2.0});
  CHECK_THROWS_AS(DecodeLatentB64("AACA"), FormatError);
}

TEST_CASE("wire service error shapes") {
  const Backends b = MockBackends();
  auto reply = HandleWireRequest(b, kEncodePath, "{not json");
  CHECK(reply.status == 400);
  ErrorOf(reply);
  reply = HandleWireRequest(b, kEncodePath, R"({"texts": "one"})");
  CHECK(reply.status == 400);
  reply = HandleWireRequest(b, kEncodePath, R"({"texts": []})");
  CHECK(reply.status == 400);
  CHECK(ErrorOf(reply) == "nothing to encode");
  reply = HandleWireRequest(b, kDecodePath,
                            R"({"instruction": "x", "max_tokens": 0})");
  CHECK(reply.status == 400);
  reply = HandleWireRequest(
      b, kDecodePath,
      json{{"latent_b64", EncodeLatentB64(std::vector<double>{1.0, 0.0})},
           {"instruction", "x"},
           {"max_tokens", 8}}
          .dump());
  CHECK(reply.status == 400);
  CHECK(ErrorOf(reply).find("dimension mismatch") != std::string::npos);
  reply = HandleWireRequest(
      b, kDecodePath,
      R"({"latent_b64": "@@@@", "instruction": "x", "max_tokens": 8})");
  CHECK(reply.status == 400);
  reply = HandleWireRequest(b, kJudgePath,
                            R"({"idea": "a", "objective": "b", "rubric_version": "9"})");
  CHECK(reply.status == 400);
  reply = HandleWireRequest(b, kJudgePath, R"({"objective": "b"})");
  CHECK(reply.status == 400);
  reply = HandleWireRequest(b, "/v1/nope", "{}");
  CHECK(reply.status == 404);
  ErrorOf(reply);
  reply = HandleWireRequest(b, kHealthPath, "");
  CHECK(reply.status == 200);
}

class ExplodingEncoder final : public Encoder {
 public:
  std::vector<Embedding> Encode(std::span<const std::string>) override {
    throw BackendError("model crashed");
  }
  bool unit_norm() const override { return true; }
};

TEST_CASE("backend failures become 500") {
  Backends b = MockBackends();
  b.encoder = std::make_shared<ExplodingEncoder>();
  const auto reply = HandleWireRequest(b, kEncodePath, R"({"texts": ["x"]})");
  CHECK(reply.status == 500);
  CHECK(ErrorOf(reply) == "model crashed");
}

TEST_CASE("remote clients over the wire agree with the mock backends") {
  const Backends direct = MockBackends();
  const auto transport = InProcess(direct);
  RemoteEncoder enc(Descriptor(Role::kEncoder), transport, true);
  RemoteDecoder dec(Descriptor(Role::kDecoder), transport, World()->dim);
  RemoteJudge judge(Descriptor(Role::kJudge), transport);

  std::vector<std::string> texts;
  for (const auto& entry : World()->vocabulary) texts.push_back(entry.text);
  texts.push_back("not in the vocabulary");
  const auto remote = EncodeTexts(enc, texts);
  const auto local = EncodeTexts(*direct.encoder, texts);
  REQUIRE(remote.size() == local.size());
  for (size_t i = 0; i < remote.size(); ++i) CHECK(remote[i] == local[i]);

  for (size_t i = 0; i < World()->vocabulary.size(); i += 5) {
    const auto& e = World()->vocabulary[i].embedding;
    const DecodeRequest request{
        .projected = {std::vector<double>(e.values().begin(), e.values().end())}};
    CHECK(DecodeLatent(dec, request) == World()->vocabulary[i].text);
    const ScoreCard want = JudgeIdea(*direct.judge, texts[i], World()->objective);
    const ScoreCard got = JudgeIdea(judge, texts[i], World()->objective);
    CHECK(got == want);
  }
  const std::string prompt = "Objective: " + World()->objective;
  CHECK(dec.Generate(prompt, 16) == direct.decoder->Generate(prompt, 16));
}

// Fails the first `failures` calls with the given behaviour.
class FlakyTransport final : public Transport {
 public:
  FlakyTransport(std::shared_ptr<Transport> inner, int failures, int status)
      : inner_(std::move(inner)), failures_(failures), status_(status) {}

  HttpReply Post(std::string_view path, const std::string& body) override {
    const int n = calls_++;
    if (n < failures_) {
      if (status_ == 0) throw BackendError("connection reset");
      return HttpReply{status_, R"({"error": "flaky"})"};
    }
    return inner_->Post(path, body);
  }
  int calls() const { return calls_; }

 private:
  std::shared_ptr<Transport> inner_;
  int failures_;
  int status_;
  std::atomic<int> calls_{0};
};

TEST_CASE("retry policy") {
  const auto inner = InProcess(MockBackends());
  const std::vector<std::string> one = {"x"};

  auto flaky = std::make_shared<FlakyTransport>(inner, 2, 503);
  RemoteEncoder recovers(Descriptor(Role::kEncoder, 1, 2), flaky);
  CHECK(EncodeTexts(recovers, one).size() == 1);
  CHECK(flaky->calls() == 3);

  auto down = std::make_shared<FlakyTransport>(inner, 100, 0);
  RemoteEncoder gives_up(Descriptor(Role::kEncoder, 1, 2), down);
  CHECK_THROWS_AS(EncodeTexts(gives_up, one), BackendError);
  CHECK(down->calls() == 3);

  auto rejected = std::make_shared<FlakyTransport>(inner, 100, 400);
  RemoteEncoder no_retry(Descriptor(Role::kEncoder, 1, 5), rejected);
  CHECK_THROWS_AS(EncodeTexts(no_retry, one), BackendError);
  CHECK(rejected->calls() == 1);
}

TEST_CASE("invalid judge cards are retried once") {
  std::atomic<int> calls{0};
  auto bad = std::make_shared<InProcessTransport>(
      [&calls](std::string_view, const std::string&) {
        ++calls;
        return HttpReply{200, R"({"originality": 6, "relevant": true,
                                  "elaboration": 2, "category": "x"})"};
      });
  RemoteJudge judge(Descriptor(Role::kJudge), bad);
  CHECK_THROWS_AS(judge.Score("idea", "objective"), ScoringError);
  CHECK(calls.load() == 2);
}

TEST_CASE("remote clients cap in-flight requests") {
  const Backends backends = MockBackends();
  std::atomic<int> active{0}, peak{0};
  auto slow = std::make_shared<InProcessTransport>(
      [&](std::string_view path, const std::string& body) {
        const int now = ++active;
        int seen = peak.load();
        while (now > seen && !peak.compare_exchange_weak(seen, now)) {
        }
        std::this_thread::sleep_for(std::chrono::milliseconds(5));
        auto reply = HandleWireRequest(backends, path, body);
        --active;
        return reply;
      });
  RemoteEncoder enc(Descriptor(Role::kEncoder, 2), slow, true);
  ParallelFor(24, 8, [&](size_t i) {
    const std::vector<std::string> t = {"idea " + std::to_string(i)};
    EncodeTexts(enc, t);
  });
  CHECK(peak.load() <= 2);
  CHECK(peak.load() >= 1);
}

// Serves HandleWireRequest over real HTTP on a loopback port.
class LoopbackServer {
 public:
  explicit LoopbackServer(Backends backends) : backends_(std::move(backends)) {
    server_.Post(R"(/v1/.*)", [this](const httplib::Request& req,
                                     httplib::Response& res) {
      {
        std::lock_guard lock(mu_);
        last_auth_ = req.get_header_value("Authorization");
      }
      const HttpReply reply = HandleWireRequest(backends_, req.path, req.body);
      res.status = reply.status;
      res.set_content(reply.body, "application/json");
    });
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }
  ~LoopbackServer() {
    server_.stop();
    thread_.join();
  }
  std::string endpoint() const {
    return "http://127.0.0.1:" + std::to_string(port_);
  }
  std::string last_auth() {
    std::lock_guard lock(mu_);
    return last_auth_;
  }

 private:
  Backends backends_;
  httplib::Server server_;
  int port_ = 0;
  std::thread thread_;
  std::mutex mu_;
  std::string last_auth_;
};

TEST_CASE("wire protocol over loopback HTTP") {
  const Backends direct = MockBackends();
  LoopbackServer server(direct);
  auto transport = std::make_shared<HttpTransport>(
      server.endpoint(), std::chrono::milliseconds(5000), "sekret");
  RemoteEncoder enc(Descriptor(Role::kEncoder), transport, true);
  RemoteDecoder dec(Descriptor(Role::kDecoder), transport, World()->dim);
  RemoteJudge judge(Descriptor(Role::kJudge), transport);

  const std::vector<std::string> texts = {World()->vocabulary[3].text, "novel"};
  const auto embeddings = EncodeTexts(enc, texts);
  CHECK(embeddings[0] == World()->vocabulary[3].embedding);
  CHECK(server.last_auth() == "Bearer sekret");

  const auto& e = World()->vocabulary[7].embedding;
  const DecodeRequest request{
      .projected = {std::vector<double>(e.values().begin(), e.values().end())}};
  CHECK(DecodeLatent(dec, request) == World()->vocabulary[7].text);
  CHECK(JudgeIdea(judge, texts[0], World()->objective) ==
        JudgeIdea(*direct.judge, texts[0], World()->objective));

  const HttpReply raw = transport->Post("/v1/encode", R"({"texts": 3})");
  CHECK(raw.status == 400);
  CHECK(json::parse(raw.body).contains("error"));
  CHECK(transport->Post("/v1/unknown", "{}").status == 404);
}

TEST_CASE("unreachable endpoint is a backend error") {
  int port = 0;
  {
    httplib::Server probe;
    port = probe.bind_to_any_port("127.0.0.1");
  }
  auto transport = std::make_shared<HttpTransport>(
      "http://127.0.0.1:" + std::to_string(port), std::chrono::milliseconds(500));
  RemoteEncoder enc(Descriptor(Role::kEncoder, 1, 1), transport);
  CHECK_THROWS_AS(EncodeTexts(enc, std::vector<std::string>{"x"}), BackendError);
  CHECK_THROWS_AS(HttpTransport("ftp://x", std::chrono::milliseconds(1)),
                  ConfigError);
}

}  // namespace
}  // namespace ideonaut::gateway
