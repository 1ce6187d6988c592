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

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <memory>
#include <numeric>
#include <random>
#include <thread>
#include <vector>

#include "ideonaut/error.h"
#include "ideonaut/gateway/backend.h"
#include "ideonaut/gateway/judge_reply.h"
#include "ideonaut/gateway/mock_world.h"
#include "ideonaut/gateway/parallel.h"
#include "ideonaut/hashing.h"
#include "ideonaut/latent/latent_math.h"
#include "ideonaut/rng.h"
#include "test_util.h"

namespace ideonaut::gateway {
namespace {

using latent::EuclideanDistance;

Embedding Unit(const Embedding& e) { return latent::Renormalize(e); }

// Five points on the unit circle in the xy-plane (z = 0), a centre at +x
// and a single anchor at the centre.
std::shared_ptr<const MockWorld> SmallWorld() {
  auto w = std::make_shared<MockWorld>();
  w->dim = 3;
  w->objective = "objective";
  w->objective_center = Embedding({1, 0, 0});
  w->relevance_radius = 1.0;
  w->novelty_floor = 0.5;
  w->anchors = {Embedding({1, 0, 0})};
  w->vocabulary = {
      {"far away", Embedding({0, 0, 1}), "misc"},
      {"along x", Embedding({1, 0, 0}), "axis"},
      {"along y", Embedding({0, 1, 0}), "axis"},
      {"between x and y", Unit({1, 1, 0.1}), "diagonal"},
      {"minus x", Embedding({-1, 0, 0}), "axis"},
  };
  w->Validate();
  return w;
}

DecodeRequest Request(std::vector<double> v) {
  return DecodeRequest{.projected = {std::move(v)}};
}

TEST_CASE("fnv1a64 reference values") {
  CHECK(Fnv1a64("") == 0xcbf29ce484222325ULL);
  CHECK(Fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
  CHECK(Fnv1a64("foobar") == 0x85944171f73967e8ULL);
  CHECK(HexU64(0xab) == "00000000000000ab");
}

TEST_CASE("mock world validation") {
  MockWorld w = *SmallWorld();
  w.novelty_floor = 1.0;
  CHECK_THROWS_AS(w.Validate(), ConfigError);
  w = *SmallWorld();
  w.vocabulary[0].embedding = Embedding({0, 0, 2});
  CHECK_THROWS_AS(w.Validate(), ConfigError);
  w = *SmallWorld();
  w.vocabulary[0].embedding = Embedding({0, 1});
  CHECK_THROWS_AS(w.Validate(), ConfigError);
}

TEST_CASE("mock encoder") {
  const auto world = SmallWorld();
  MockEncoder enc(world);
  const std::vector<std::string> texts = {"along y", "never seen", "objective"};
  const auto out = EncodeTexts(enc, texts);
  REQUIRE(out.size() == 3);
  CHECK(out[0] == world->vocabulary[2].embedding);
  CHECK(out[2] == world->objective_center);

  // Hash-to-sphere, recomputed: Gaussians from Rng(FNV-1a(text)), normalized.
  Rng rng(Fnv1a64("never seen"));
  std::vector<double> g(3);
  for (double& x : g) x = rng.Gaussian();
  CHECK(testing::AllRelClose(out[1].values(), Unit(Embedding(g)).values(), 1e-15));
  CHECK(EncodeTexts(enc, texts)[1] == out[1]);

  CHECK_THROWS_WITH_AS(EncodeTexts(enc, std::vector<std::string>{}),
                       "nothing to encode", InvalidArgumentError);
}

TEST_CASE("mock decoder examples") {
  const auto world = SmallWorld();
  MockDecoder dec(world);
  CHECK(DecodeLatent(dec, Request({0, 1, 0})) == "along y");
  // Equidistant between entries 1 and 2: the lower index wins.
  auto tie_world = std::make_shared<MockWorld>(*world);
  tie_world->vocabulary.resize(3);
  MockDecoder tie(tie_world);
  CHECK(DecodeLatent(tie, Request({1, 1, 0})) == "along x");
  CHECK(tie.NearestIndex(std::vector<double>{0.5, 0.5, 0}) == 1);
  // Midpoint of two far-apart entries lands on the one between them.
  const auto mid_xy = latent::Interpolate(Embedding({1, 0, 0.02}),
                                          Embedding({0, 1, 0.02}), {0.5});
  CHECK(DecodeLatent(dec, Request({mid_xy.values().begin(),
                                   mid_xy.values().end()})) ==
        "between x and y");
  CHECK(dec.token_dim() == 3u);
  CHECK_THROWS_AS(DecodeLatent(dec, Request({0, 0, 0})), BackendError);
}

TEST_CASE("mock decoder matches a brute-force argmax") {
  const size_t dim = 16;
  std::mt19937 gen(31);
  auto world = std::make_shared<MockWorld>();
  world->dim = dim;
  world->objective = "o";
  world->objective_center = Unit(testing::RandomEmbedding(gen, dim));
  world->relevance_radius = 1.0;
  world->novelty_floor = 0.5;
  for (int i = 0; i < 10000; ++i) {
    const auto e = testing::RandomEmbedding(gen, dim);
    world->vocabulary.push_back(
        {"v" + std::to_string(i),
         Unit(e),
         "c"});
  }
  world->Validate();
  MockDecoder dec(world);
  for (int trial = 0; trial < 20; ++trial) {
    const auto latent_vec = testing::RandomEmbedding(gen, dim);
    size_t best = 0;
    double best_cos = -2.0;
    for (size_t i = 0; i < world->vocabulary.size(); ++i) {
      const auto& v = world->vocabulary[i].embedding;
      double dot = 0.0, na = 0.0, nb = 0.0;
      for (size_t k = 0; k < dim; ++k) {
        dot += latent_vec[k] * v[k];
        na += latent_vec[k] * latent_vec[k];
        nb += v[k] * v[k];
      }
      const double c = dot / std::sqrt(na * nb);
      if (c > best_cos) {
        best_cos = c;
        best = i;
      }
    }
    CHECK(dec.NearestIndex(latent_vec.values()) == best);
  }
}

TEST_CASE("mock decoder plain generation skips listed ideas") {
  const auto world = SmallWorld();
  MockDecoder dec(world);
  CHECK(dec.Generate("Objective: objective", 16) == "along x");
  CHECK(dec.Generate("Already proposed:\n- along x\nObjective: objective", 16) ==
        "between x and y");
}

TEST_CASE("mock judge geometry") {
  // Point on the unit circle at chord distance 0.9 R from the centre.
  const double radius = 1.0;
  const double theta = 2.0 * std::asin(0.45 * radius);
  const Embedding p({std::cos(theta), std::sin(theta), 0});
  auto world = std::make_shared<MockWorld>(*SmallWorld());
  world->vocabulary.push_back({"at 0.9 R", p, "probe"});
  world->vocabulary.push_back({"outside", Unit({-1, 0.2, 0}), "probe"});
  world->Validate();
  MockJudge judge(world);

  const double to_center = EuclideanDistance(p, world->objective_center);
  CHECK(to_center == doctest::Approx(0.9 * radius));
  CHECK(EuclideanDistance(p, world->anchors[0]) >= world->novelty_floor);
  const ScoreCard near = JudgeIdea(judge, "at 0.9 R", "objective");
  CHECK(near.relevant);
  CHECK(near.originality == 5);
  CHECK(near.category == "probe");

  CHECK_FALSE(JudgeIdea(judge, "outside", "objective").relevant);
  // Same position as the anchor.
  CHECK(JudgeIdea(judge, "along x", "objective").originality == 1);
  CHECK(JudgeIdea(judge, "unknown idea text", "objective").category ==
        "uncategorized");
}

TEST_CASE("mock scoring helpers") {
  CHECK(MockOriginality(0.0, 0.5) == 1);
  CHECK(MockOriginality(0.125, 0.5) == 2);
  CHECK(MockOriginality(0.3, 0.5) == 3);
  CHECK(MockOriginality(0.375, 0.5) == 4);
  CHECK(MockOriginality(0.5, 0.5) == 5);
  CHECK(MockOriginality(7.0, 0.5) == 5);
  CHECK(MockElaboration("hat") == 1);
  CHECK(MockElaboration("use it as a hat") == 2);
  CHECK(MockElaboration("a b c d e f g h i j k l m n o p q r") == 5);
}

TEST_CASE("synthetic world scoring is consistent with its definition") {
  const std::vector<std::string> seeds = {"first seed", "second seed"};
  const MockWorld world = SynthesizeWorld({}, "Find uses for a brick", seeds);
  CHECK(world.vocabulary.size() == 242);
  CHECK(world.vocabulary[0].text == "first seed");
  CHECK(world.vocabulary[1].text == "second seed");
  CHECK(world.anchors.size() == 3);

  auto shared = std::make_shared<const MockWorld>(world);
  MockJudge judge(shared);
  std::vector<std::pair<double, int>> by_distance;
  size_t accepted = 0;
  for (const VocabularyEntry& entry : world.vocabulary) {
    CHECK(latent::Norm(entry.embedding) == doctest::Approx(1.0).epsilon(1e-12));
    const ScoreCard card = judge.Score(entry.text, world.objective);
    const double d = EuclideanDistance(entry.embedding, world.objective_center);
    CHECK(card.relevant == (d <= world.relevance_radius));
    double nearest = 1e9;
    for (const auto& a : world.anchors) {
      nearest = std::min(nearest, EuclideanDistance(entry.embedding, a));
    }
    by_distance.emplace_back(nearest, card.originality);
    if (card.relevant && card.originality >= 4) ++accepted;
  }
  std::ranges::sort(by_distance);
  for (size_t i = 1; i < by_distance.size(); ++i) {
    CHECK(by_distance[i].second >= by_distance[i - 1].second);
  }
  CHECK(accepted >= 20);

  // Same inputs, same world.
  const MockWorld again = SynthesizeWorld({}, "Find uses for a brick", seeds);
  REQUIRE(again.vocabulary.size() == world.vocabulary.size());
  for (size_t i = 0; i < world.vocabulary.size(); ++i) {
    CHECK(again.vocabulary[i].text == world.vocabulary[i].text);
    CHECK(again.vocabulary[i].embedding == world.vocabulary[i].embedding);
  }
}

TEST_CASE("mock world file round trip") {
  const MockWorld world = SynthesizeWorld({.vocabulary_size = 20}, "obj", {});
  const auto dir = testing::ScratchDir("world");
  SaveWorldFile(world, dir / "w.json");
  const MockWorld loaded = LoadWorldFile(dir / "w.json");
  CHECK(loaded.objective_center == world.objective_center);
  REQUIRE(loaded.vocabulary.size() == world.vocabulary.size());
  CHECK(loaded.vocabulary[5].embedding == world.vocabulary[5].embedding);
  CHECK_THROWS_AS(LoadWorldFile(dir / "missing.json"), ConfigError);
}

TEST_CASE("judge reply parsing") {
  const ScoreCard c =
      ParseJudgeReply("originality: 4\nrelevant: yes\nelaboration: 3\ncategory: tools");
  CHECK(c.originality == 4);
  CHECK(c.relevant);
  CHECK(c.elaboration == 3);
  CHECK(c.category == "tools");

  const ScoreCard fenced = ParseJudgeReply(
      "Here you go.\n```\nOriginality: 2\nrelevant: no\nelaboration: 5\n"
      "category: household objects\nidea: something else entirely\n```\n"
      "originality: 5\n");
  CHECK(fenced.originality == 2);
  CHECK_FALSE(fenced.relevant);
  CHECK(fenced.category == "household objects");

  CHECK_THROWS_WITH_AS(
      ParseJudgeReply("originality: 6\nrelevant: yes\nelaboration: 3\ncategory: x"),
      "score out of range", ScoringError);
  CHECK_THROWS_WITH_AS(
      ParseJudgeReply("originality: 3\nelaboration: 3\ncategory: x"),
      "missing key: relevant", ScoringError);
  CHECK_THROWS_AS(
      ParseJudgeReply("originality: 3\nrelevant: maybe\nelaboration: 3\ncategory: x"),
      ScoringError);
  CHECK_THROWS_AS(ParseJudgeReply(""), ScoringError);
  CHECK(BuildJudgePrompt("an idea", "the goal").find("an idea") != std::string::npos);
}

class CountingEncoder final : public Encoder {
 public:
  explicit CountingEncoder(std::vector<Embedding> reply) : reply_(std::move(reply)) {}
  std::vector<Embedding> Encode(std::span<const std::string>) override {
    return reply_;
  }
  bool unit_norm() const override { return false; }

 private:
  std::vector<Embedding> reply_;
};

class FixedDecoder final : public Decoder {
 public:
  std::string DecodeLatent(const DecodeRequest&) override { return ""; }
  std::string Generate(std::string_view, int) override { return ""; }
  std::optional<size_t> token_dim() const override { return std::nullopt; }
};

class BadJudge final : public Judge {
 public:
  ScoreCard Score(std::string_view, std::string_view) override {
    return ScoreCard{.originality = 9, .relevant = true, .elaboration = 1};
  }
};

TEST_CASE("backend contract checks") {
  const std::vector<std::string> two = {"a", "b"};
  CountingEncoder short_reply({Embedding({1.0})});
  CHECK_THROWS_AS(EncodeTexts(short_reply, two), BackendError);
  CountingEncoder ragged({Embedding({1.0}), Embedding({1.0, 2.0})});
  CHECK_THROWS_AS(EncodeTexts(ragged, two), BackendError);
  FixedDecoder empty;
  CHECK_THROWS_AS(DecodeLatent(empty, Request({1})), BackendError);
  BadJudge bad;
  CHECK_THROWS_AS(JudgeIdea(bad, "idea", "obj"), ScoringError);
  CHECK_THROWS_AS(JudgeIdea(bad, "", "obj"), InvalidArgumentError);
}

TEST_CASE("backend descriptor validation") {
  BackendDescriptor d{.role = Role::kDecoder};
  CHECK_NOTHROW(d.Validate());
  CHECK(d.is_mock());
  d.max_parallel = 0;
  CHECK_THROWS_AS(d.Validate(), ConfigError);
  d = {.role = Role::kDecoder, .timeout = std::chrono::milliseconds(0)};
  CHECK_THROWS_AS(d.Validate(), ConfigError);
  d = {.role = Role::kDecoder, .retry_limit = -1};
  CHECK_THROWS_AS(d.Validate(), ConfigError);
}

TEST_CASE("parallel for") {
  std::vector<std::atomic<int>> hits(50);
  std::atomic<int> active{0}, peak{0};
  ParallelFor(hits.size(), 3, [&](size_t i) {
    const int now = ++active;
    int seen = peak.load();
    while (now > seen && !peak.compare_exchange_weak(seen, now)) {
    }
    std::this_thread::sleep_for(std::chrono::milliseconds(2));
    ++hits[i];
    --active;
  });
  for (const auto& h : hits) CHECK(h.load() == 1);
  CHECK(peak.load() <= 3);
  CHECK(peak.load() >= 2);

  CHECK_THROWS_WITH(ParallelFor(10, 4,
                                [](size_t i) {
                                  if (i == 3 || i == 7) {
                                    throw BackendError("fail " + std::to_string(i));
                                  }
                                }),
                    "fail 3");
  ParallelFor(0, 2, [](size_t) { FAIL("not called"); });
}

}  // namespace
}  // namespace ideonaut::gateway
