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

#ifndef IDEONAUT_GATEWAY_MOCK_WORLD_H_
#define IDEONAUT_GATEWAY_MOCK_WORLD_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ideonaut/gateway/backend.h"
#include "ideonaut/latent/embedding.h"

namespace ideonaut::gateway {

struct VocabularyEntry {
  std::string text;
  Embedding embedding;
  std::string category;
};

// A synthetic, fully deterministic stand-in for encoder, decoder and judge.
//
// Geometry is Euclidean on the unit sphere. An idea is relevant when its
// embedding lies within relevance_radius of objective_center. Originality is
// a step function of the distance d to the nearest anchor:
//   originality = 1 + min(4, floor(4 d / novelty_floor))
// so an anchor scores 1 and anything at least novelty_floor away scores 5.
// Anchors are usually the run's seed ideas.
struct MockWorld {
  size_t dim = 0;
  std::vector<VocabularyEntry> vocabulary;
  // Text that encodes to objective_center.
  std::string objective;
  Embedding objective_center;
  double relevance_radius = 1.0;
  double novelty_floor = 0.5;
  std::vector<Embedding> anchors;

  // Throws ConfigError when an invariant fails.
  void Validate() const;
};

// Deterministic unit vector for text the world does not know:
// seed Rng with Fnv1a64(text), draw `dim` Gaussians, normalize.
Embedding HashToSphere(std::string_view text, size_t dim);

int MockOriginality(double distance_to_nearest_anchor, double novelty_floor);
// 1 + (words - 1) / 3, clamped to [1, 5].
int MockElaboration(std::string_view text);

class MockEncoder final : public Encoder {
 public:
  explicit MockEncoder(std::shared_ptr<const MockWorld> world);
  std::vector<Embedding> Encode(std::span<const std::string> texts) override;
  bool unit_norm() const override { return true; }
  Embedding EncodeOne(std::string_view text) const;

 private:
  std::shared_ptr<const MockWorld> world_;
};

// Soft-token mode returns the vocabulary text with the highest cosine to the
// latent (lowest index wins ties). Plain mode reads the objective from the
// last "Objective:" line of the prompt and returns the vocabulary text
// closest to it that the prompt does not already list as "- <text>".
class MockDecoder final : public Decoder {
 public:
  explicit MockDecoder(std::shared_ptr<const MockWorld> world);
  std::string DecodeLatent(const DecodeRequest& request) override;
  std::string Generate(std::string_view instruction, int max_tokens) override;
  std::optional<size_t> token_dim() const override { return world_->dim; }

  size_t NearestIndex(std::span<const double> latent) const;

 private:
  std::shared_ptr<const MockWorld> world_;
  MockEncoder encoder_;
};

class MockJudge final : public Judge {
 public:
  explicit MockJudge(std::shared_ptr<const MockWorld> world);
  ScoreCard Score(std::string_view idea, std::string_view objective) override;

 private:
  std::shared_ptr<const MockWorld> world_;
  MockEncoder encoder_;
};

// Encoder, decoder and judge all backed by `world`.
Backends MakeMockBackends(std::shared_ptr<const MockWorld> world);

struct SyntheticWorldParams {
  uint64_t seed = 1;
  size_t dim = 16;
  size_t vocabulary_size = 240;
  size_t categories = 8;
  size_t anchors = 3;
  double relevance_radius = 1.0;
  double novelty_floor = 0.5;
  // Angles (radians) from the objective centre.
  double anchor_angle_max = 0.15;
  double seed_angle_min = 0.45;
  double seed_angle_max = 0.75;
  double vocabulary_angle_max = 1.5;
};

// Builds a world around HashToSphere(objective): anchors cluster at the
// centre, `seed_texts` sit on a ring around it, and the vocabulary (which
// includes the seeds) spreads out to vocabulary_angle_max in
// `categories` directional clusters.
MockWorld SynthesizeWorld(const SyntheticWorldParams& params,
                          std::string_view objective,
                          std::span<const std::string> seed_texts);

MockWorld LoadWorldFile(const std::filesystem::path& path);
void SaveWorldFile(const MockWorld& world, const std::filesystem::path& path);

}  // namespace ideonaut::gateway

#endif  // IDEONAUT_GATEWAY_MOCK_WORLD_H_
