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

#include "ideonaut/gateway/mock_world.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <json.hpp>
#include <limits>
#include <set>
#include <sstream>
#include <string>

#include "ideonaut/error.h"
#include "ideonaut/hashing.h"
#include "ideonaut/latent/latent_math.h"
#include "ideonaut/rng.h"

namespace ideonaut::gateway {
namespace {

using nlohmann::json;

constexpr double kUnitNormTolerance = 1e-9;

std::vector<std::string_view> Lines(std::string_view text) {
  std::vector<std::string_view> out;
  while (!text.empty()) {
    const size_t eol = text.find('\n');
    out.push_back(text.substr(0, eol));
    if (eol == std::string_view::npos) break;
    text.remove_prefix(eol + 1);
  }
  return out;
}

std::string_view TrimSpaces(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' ||
                        s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() &&
         (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

// Unit vector orthogonal to `axis`.
Embedding RandomTangent(Rng& rng, const Embedding& axis) {
  for (;;) {
    std::vector<double> g(axis.dim());
    for (double& v : g) v = rng.Gaussian();
    const Embedding raw(g);
    const double along = latent::Dot(raw, axis);
    for (size_t k = 0; k < g.size(); ++k) g[k] -= along * axis[k];
    const Embedding tangent(std::move(g));
    if (latent::Norm(tangent) > 1e-6) return latent::Renormalize(tangent);
  }
}

Embedding Tilted(const Embedding& center, const Embedding& tangent,
                 double angle) {
  std::vector<double> out(center.dim());
  for (size_t k = 0; k < out.size(); ++k) {
    out[k] = std::cos(angle) * center[k] + std::sin(angle) * tangent[k];
  }
  return latent::Renormalize(Embedding(std::move(out)));
}

// Tangent direction near `direction`, still orthogonal to `axis`.
Embedding ClusterTangent(Rng& rng, const Embedding& axis,
                         const Embedding& direction) {
  const Embedding jitter = RandomTangent(rng, axis);
  std::vector<double> v(axis.dim());
  for (size_t k = 0; k < v.size(); ++k) v[k] = direction[k] + 0.5 * jitter[k];
  const Embedding mixed(std::move(v));
  return latent::Renormalize(mixed);
}

constexpr std::array<std::string_view, 10> kVerbs = {
    "Turn", "Reshape", "Repurpose", "Fold", "Stack",
    "Carve", "Paint", "Combine", "Hang", "Wrap"};
constexpr std::array<std::string_view, 16> kThings = {
    "lamp",          "planter",      "bookend",    "musical instrument",
    "puzzle",        "bird feeder",  "doorstop",   "sculpture",
    "game piece",    "sun dial",     "paperweight", "coaster",
    "picture frame", "toy boat",     "wind chime", "weather vane"};
constexpr std::array<std::string_view, 12> kSettings = {
    "for a classroom",      "at a picnic",         "in a garden",
    "for a science fair",   "during a blackout",   "on a long hiking trip",
    "for a birthday party", "in a busy workshop",  "for a curious pet",
    "at the beach",         "in a tiny apartment", "for a school play"};
constexpr std::array<std::string_view, 12> kCategories = {
    "tools",   "art",     "food",      "shelter", "games",  "science",
    "fashion", "music",   "storage",   "transport", "decor", "garden"};

std::string CategoryName(size_t k) {
  if (k < kCategories.size()) return std::string(kCategories[k]);
  return "category-" + std::to_string(k);
}

std::string IdeaText(Rng& rng) {
  std::string text(kVerbs[rng.UniformIndex(kVerbs.size())]);
  text += " it into a ";
  text += kThings[rng.UniformIndex(kThings.size())];
  text += ' ';
  text += kSettings[rng.UniformIndex(kSettings.size())];
  return text;
}

json EmbeddingJson(const Embedding& e) {
  return std::vector<double>(e.values().begin(), e.values().end());
}

Embedding EmbeddingFromJson(const json& j) {
  return Embedding(j.get<std::vector<double>>());
}

}  // namespace

void MockWorld::Validate() const {
  if (dim == 0) throw ConfigError("mock world: dim must be positive");
  if (vocabulary.empty()) throw ConfigError("mock world: empty vocabulary");
  if (objective_center.dim() != dim) {
    throw ConfigError("mock world: objective_center has the wrong dimension");
  }
  if (!(relevance_radius > novelty_floor && novelty_floor > 0.0)) {
    throw ConfigError(
        "mock world: requires relevance_radius > novelty_floor > 0");
  }
  for (const VocabularyEntry& entry : vocabulary) {
    if (entry.embedding.dim() != dim) {
      throw ConfigError("mock world: vocabulary entry '" + entry.text +
                        "' has the wrong dimension");
    }
    if (std::abs(latent::Norm(entry.embedding) - 1.0) > kUnitNormTolerance) {
      throw ConfigError("mock world: vocabulary entry '" + entry.text +
                        "' is not unit norm");
    }
    if (entry.text.empty()) throw ConfigError("mock world: empty vocabulary text");
  }
  for (const Embedding& anchor : anchors) {
    if (anchor.dim() != dim) {
      throw ConfigError("mock world: anchor has the wrong dimension");
    }
  }
}

Embedding HashToSphere(std::string_view text, size_t dim) {
  if (dim == 0) throw InvalidArgumentError("dimension must be positive");
  Rng rng(Fnv1a64(text));
  for (;;) {
    std::vector<double> v(dim);
    for (double& x : v) x = rng.Gaussian();
    Embedding e(std::move(v));
    if (latent::Norm(e) > 0.0) return latent::Renormalize(e);
  }
}

int MockOriginality(double distance, double novelty_floor) {
  if (!(distance >= 0.0)) return kMinScore;
  const double steps = std::floor(4.0 * distance / novelty_floor);
  return kMinScore + static_cast<int>(std::min(4.0, steps));
}

int MockElaboration(std::string_view text) {
  std::istringstream words{std::string(text)};
  int count = 0;
  for (std::string w; words >> w;) ++count;
  return std::clamp(1 + (count - 1) / 3, kMinScore, kMaxScore);
}

MockEncoder::MockEncoder(std::shared_ptr<const MockWorld> world)
    : world_(std::move(world)) {
  if (!world_) throw InvalidArgumentError("null mock world");
}

Embedding MockEncoder::EncodeOne(std::string_view text) const {
  if (text == world_->objective) return world_->objective_center;
  for (const VocabularyEntry& entry : world_->vocabulary) {
    if (entry.text == text) return entry.embedding;
  }
  return HashToSphere(text, world_->dim);
}

std::vector<Embedding> MockEncoder::Encode(std::span<const std::string> texts) {
  std::vector<Embedding> out;
  out.reserve(texts.size());
  for (const std::string& t : texts) out.push_back(EncodeOne(t));
  return out;
}

MockDecoder::MockDecoder(std::shared_ptr<const MockWorld> world)
    : world_(world), encoder_(world) {}

size_t MockDecoder::NearestIndex(std::span<const double> latent_values) const {
  const Embedding latent_vec(
      std::vector<double>(latent_values.begin(), latent_values.end()));
  size_t best = 0;
  double best_cos = -std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < world_->vocabulary.size(); ++i) {
    const double c =
        latent::CosineSimilarity(latent_vec, world_->vocabulary[i].embedding);
    if (c > best_cos) {
      best_cos = c;
      best = i;
    }
  }
  return best;
}

std::string MockDecoder::DecodeLatent(const DecodeRequest& request) {
  if (request.projected.values.size() != world_->dim) {
    throw InvalidArgumentError("dimension mismatch in mock decode");
  }
  try {
    return world_->vocabulary[NearestIndex(request.projected.values)].text;
  } catch (const InvalidArgumentError&) {
    // Zero latent: nothing to paraphrase.
    return "";
  }
}

std::string MockDecoder::Generate(std::string_view instruction, int) {
  std::string_view objective = instruction;
  std::set<std::string, std::less<>> listed;
  for (std::string_view line : Lines(instruction)) {
    line = TrimSpaces(line);
    if (line.starts_with("Objective:")) {
      objective = TrimSpaces(line.substr(10));
    } else if (line.starts_with("- ")) {
      listed.emplace(TrimSpaces(line.substr(2)));
    }
  }
  const Embedding target = encoder_.EncodeOne(objective);
  std::vector<std::pair<double, size_t>> ranked;
  for (size_t i = 0; i < world_->vocabulary.size(); ++i) {
    ranked.emplace_back(
        -latent::CosineSimilarity(target, world_->vocabulary[i].embedding), i);
  }
  std::stable_sort(ranked.begin(), ranked.end());
  for (const auto& [neg_cos, i] : ranked) {
    if (!listed.contains(world_->vocabulary[i].text)) {
      return world_->vocabulary[i].text;
    }
  }
  return "";
}

MockJudge::MockJudge(std::shared_ptr<const MockWorld> world)
    : world_(world), encoder_(world) {}

ScoreCard MockJudge::Score(std::string_view idea, std::string_view objective) {
  const Embedding e = encoder_.EncodeOne(idea);
  const Embedding center = encoder_.EncodeOne(objective);
  double nearest = std::numeric_limits<double>::infinity();
  for (const Embedding& anchor : world_->anchors) {
    nearest = std::min(nearest, latent::EuclideanDistance(e, anchor));
  }
  ScoreCard card;
  card.relevant =
      latent::EuclideanDistance(e, center) <= world_->relevance_radius;
  card.originality = MockOriginality(nearest, world_->novelty_floor);
  card.elaboration = MockElaboration(idea);
  card.category = "uncategorized";
  for (const VocabularyEntry& entry : world_->vocabulary) {
    if (entry.text == idea) {
      card.category = entry.category;
      break;
    }
  }
  return card;
}

Backends MakeMockBackends(std::shared_ptr<const MockWorld> world) {
  world->Validate();
  Backends b;
  b.encoder = std::make_shared<MockEncoder>(world);
  b.decoder = std::make_shared<MockDecoder>(world);
  b.judge = std::make_shared<MockJudge>(world);
  return b;
}

MockWorld SynthesizeWorld(const SyntheticWorldParams& params,
                          std::string_view objective,
                          std::span<const std::string> seed_texts) {
  if (params.dim < 2) throw InvalidArgumentError("synthetic world needs dim >= 2");
  if (params.categories == 0) {
    throw InvalidArgumentError("synthetic world needs at least one category");
  }
  Rng rng(DeriveSeed(params.seed, Fnv1a64(objective)));
  MockWorld world;
  world.dim = params.dim;
  world.objective = std::string(objective);
  world.objective_center = HashToSphere(objective, params.dim);
  world.relevance_radius = params.relevance_radius;
  world.novelty_floor = params.novelty_floor;

  const Embedding& center = world.objective_center;
  std::vector<Embedding> directions;
  for (size_t k = 0; k < params.categories; ++k) {
    directions.push_back(RandomTangent(rng, center));
  }
  for (size_t a = 0; a < params.anchors; ++a) {
    world.anchors.push_back(Tilted(center, RandomTangent(rng, center),
                                   rng.Uniform(0.0, params.anchor_angle_max)));
  }

  std::set<std::string> used(seed_texts.begin(), seed_texts.end());
  used.insert(world.objective);
  for (size_t i = 0; i < seed_texts.size(); ++i) {
    const size_t k = i % params.categories;
    const double angle = rng.Uniform(params.seed_angle_min, params.seed_angle_max);
    world.vocabulary.push_back(
        {seed_texts[i],
         Tilted(center, ClusterTangent(rng, center, directions[k]), angle),
         CategoryName(k)});
  }
  for (size_t n = 0; n < params.vocabulary_size; ++n) {
    const size_t k = n % params.categories;
    std::string text = IdeaText(rng);
    for (int attempt = 0; used.contains(text) && attempt < 8; ++attempt) {
      text = IdeaText(rng);
    }
    if (used.contains(text)) text += " (variant " + std::to_string(n) + ")";
    used.insert(text);
    const double angle = rng.Uniform(0.0, params.vocabulary_angle_max);
    world.vocabulary.push_back(
        {std::move(text),
         Tilted(center, ClusterTangent(rng, center, directions[k]), angle),
         CategoryName(k)});
  }
  world.Validate();
  return world;
}

MockWorld LoadWorldFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open mock world file: " + path.string());
  try {
    const json j = json::parse(in);
    MockWorld world;
    world.dim = j.at("dim").get<size_t>();
    world.objective = j.at("objective").get<std::string>();
    world.objective_center = EmbeddingFromJson(j.at("objective_center"));
    world.relevance_radius = j.at("relevance_radius").get<double>();
    world.novelty_floor = j.at("novelty_floor").get<double>();
    for (const json& a : j.at("anchors")) {
      world.anchors.push_back(EmbeddingFromJson(a));
    }
    for (const json& v : j.at("vocabulary")) {
      world.vocabulary.push_back({v.at("text").get<std::string>(),
                                  EmbeddingFromJson(v.at("embedding")),
                                  v.at("category").get<std::string>()});
    }
    world.Validate();
    return world;
  } catch (const json::exception& e) {
    throw ConfigError("mock world file " + path.string() + ": " + e.what());
  } catch (const InvalidArgumentError& e) {
    throw ConfigError("mock world file " + path.string() + ": " + e.what());
  }
}

void SaveWorldFile(const MockWorld& world, const std::filesystem::path& path) {
  json j;
  j["dim"] = world.dim;
  j["objective"] = world.objective;
  j["objective_center"] = EmbeddingJson(world.objective_center);
  j["relevance_radius"] = world.relevance_radius;
  j["novelty_floor"] = world.novelty_floor;
  j["anchors"] = json::array();
  for (const Embedding& a : world.anchors) j["anchors"].push_back(EmbeddingJson(a));
  j["vocabulary"] = json::array();
  for (const VocabularyEntry& v : world.vocabulary) {
    j["vocabulary"].push_back({{"text", v.text},
                               {"embedding", EmbeddingJson(v.embedding)},
                               {"category", v.category}});
  }
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write mock world file: " + path.string());
  out << j.dump(1) << '\n';
}

}  // namespace ideonaut::gateway
