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

#ifndef IDEONAUT_TESTS_MOCK_SUPPORT_H_
#define IDEONAUT_TESTS_MOCK_SUPPORT_H_

#include <atomic>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "ideonaut/error.h"
#include "ideonaut/gateway/backend.h"
#include "ideonaut/gateway/mock_world.h"
#include "ideonaut/pipeline/run_config.h"

namespace ideonaut::testing {

inline const std::vector<std::string>& BrickSeeds() {
  static const std::vector<std::string> seeds = {
      "Use it as a doorstop",        "Build a garden border",
      "Grind it into red pigment",   "Warm it and wrap it as a bed warmer",
      "Press flowers under it",      "Use it as a bookend",
      "Make a small barbecue stand", "Drill it into a candle holder",
  };
  return seeds;
}

inline constexpr const char* kBrickObjective =
    "Find unusual uses for a common brick";

// The calibrated world most pipeline tests share.
inline std::shared_ptr<const gateway::MockWorld> BrickWorld(
    gateway::SyntheticWorldParams params = {}) {
  return std::make_shared<const gateway::MockWorld>(
      gateway::SynthesizeWorld(params, kBrickObjective, BrickSeeds()));
}

// Every vocabulary item sits within a small cap around the anchors, so no
// decoded idea can be both relevant and original enough to accept.
inline std::shared_ptr<const gateway::MockWorld> EmptyAnnulusWorld() {
  return BrickWorld({.vocabulary_size = 60,
                     .seed_angle_min = 0.05,
                     .seed_angle_max = 0.2,
                     .vocabulary_angle_max = 0.2});
}

inline RunConfig BrickConfig(uint64_t rng_seed = 11, int iterations = 1) {
  RunConfig c;
  c.objective = kBrickObjective;
  c.seed_texts = BrickSeeds();
  c.iterations = iterations;
  c.rng_seed = rng_seed;
  return c;
}

// Counts calls and optionally injects failures into a wrapped backend set.
struct Probe {
  std::atomic<int> encode_calls{0};
  std::atomic<int> decode_calls{0};
  std::atomic<int> generate_calls{0};
  std::atomic<int> judge_calls{0};
  std::atomic<int> decode_active{0};
  std::atomic<int> decode_peak{0};
  // Return true to fail the call. Judge failures key on the idea text,
  // decode failures on the 0-based call index.
  std::function<bool(const std::string& text)> fail_judge;
  std::function<bool(int call)> fail_decode;
  std::function<ScoreCard(ScoreCard)> rewrite_card;
};

class ProbeEncoder final : public gateway::Encoder {
 public:
  ProbeEncoder(std::shared_ptr<gateway::Encoder> inner, Probe& probe)
      : inner_(std::move(inner)), probe_(probe) {}
  std::vector<Embedding> Encode(std::span<const std::string> texts) override {
    ++probe_.encode_calls;
    return inner_->Encode(texts);
  }
  bool unit_norm() const override { return inner_->unit_norm(); }

 private:
  std::shared_ptr<gateway::Encoder> inner_;
  Probe& probe_;
};

class ProbeDecoder final : public gateway::Decoder {
 public:
  ProbeDecoder(std::shared_ptr<gateway::Decoder> inner, Probe& probe)
      : inner_(std::move(inner)), probe_(probe) {}
  std::string DecodeLatent(const gateway::DecodeRequest& request) override {
    const int call = probe_.decode_calls++;
    const int now = ++probe_.decode_active;
    int seen = probe_.decode_peak.load();
    while (now > seen && !probe_.decode_peak.compare_exchange_weak(seen, now)) {
    }
    struct Leave {
      std::atomic<int>& a;
      ~Leave() { --a; }
    } leave{probe_.decode_active};
    if (probe_.fail_decode && probe_.fail_decode(call)) {
      throw BackendError("injected decode failure");
    }
    return inner_->DecodeLatent(request);
  }
  std::string Generate(std::string_view instruction, int max_tokens) override {
    ++probe_.generate_calls;
    return inner_->Generate(instruction, max_tokens);
  }
  std::optional<size_t> token_dim() const override { return inner_->token_dim(); }

 private:
  std::shared_ptr<gateway::Decoder> inner_;
  Probe& probe_;
};

class ProbeJudge final : public gateway::Judge {
 public:
  ProbeJudge(std::shared_ptr<gateway::Judge> inner, Probe& probe)
      : inner_(std::move(inner)), probe_(probe) {}
  ScoreCard Score(std::string_view idea, std::string_view objective) override {
    ++probe_.judge_calls;
    if (probe_.fail_judge && probe_.fail_judge(std::string(idea))) {
      throw ScoringError("injected scoring failure");
    }
    ScoreCard card = inner_->Score(idea, objective);
    if (probe_.rewrite_card) card = probe_.rewrite_card(card);
    return card;
  }

 private:
  std::shared_ptr<gateway::Judge> inner_;
  Probe& probe_;
};

inline gateway::Backends Probed(std::shared_ptr<const gateway::MockWorld> world,
                                Probe& probe, int max_parallel = 4) {
  gateway::Backends inner = gateway::MakeMockBackends(std::move(world));
  gateway::Backends b = inner;
  b.encoder = std::make_shared<ProbeEncoder>(inner.encoder, probe);
  b.decoder = std::make_shared<ProbeDecoder>(inner.decoder, probe);
  b.judge = std::make_shared<ProbeJudge>(inner.judge, probe);
  b.decoder_desc.max_parallel = max_parallel;
  return b;
}

}  // namespace ideonaut::testing

#endif  // IDEONAUT_TESTS_MOCK_SUPPORT_H_
