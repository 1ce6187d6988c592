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

#ifndef IDEONAUT_EXPLORATION_STRATEGY_H_
#define IDEONAUT_EXPLORATION_STRATEGY_H_

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ideonaut/latent/embedding.h"
#include "ideonaut/rng.h"

namespace ideonaut::exploration {

enum class StrategyKind { kInterpolation, kExtrapolation, kNoise };

std::string_view ToString(StrategyKind kind);
StrategyKind ParseStrategyKind(std::string_view name);

// How a point entered the search space.
enum class Origin { kSeed, kInterpolation, kExtrapolation, kNoise };

std::string_view ToString(Origin origin);
Origin ParseOrigin(std::string_view name);

struct StrategyConfig {
  StrategyKind kind = StrategyKind::kInterpolation;
  double lambda_min = 0.45;
  double lambda_max = 0.55;
  // Noise scale. When unset the noise strategy uses
  // kDefaultRelativeSigma x mean norm of the manifold embeddings.
  std::optional<double> sigma;
  uint64_t rng_seed = 0;
  // Unit-normalize every candidate after blending or perturbing.
  bool renormalize = false;

  // Throws InvalidArgumentError on a range that contradicts `kind`.
  void Validate() const;
};

inline constexpr double kDefaultRelativeSigma = 0.05;

struct ExpansionSchedule {
  int expansion_factor = 5;
  int stages_per_iteration = 1;

  void Validate() const;
};

// One member of the current search population.
struct ManifoldEntry {
  std::string id;
  Embedding embedding;
};

// Everything needed to rebuild a candidate from its parents.
struct Provenance {
  Origin origin = Origin::kSeed;
  std::vector<std::string> parents;
  std::optional<double> lambda;
  std::optional<double> sigma;
  std::optional<uint64_t> noise_seed;
  bool renormalized = false;

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct Candidate {
  Embedding embedding;
  Provenance provenance;
};

struct CandidateBatch {
  std::vector<Candidate> candidates;
  int stage_index = 0;
};

// Extension point for exploration schemes. Implementations must be
// deterministic given the generator state.
class Strategy {
 public:
  virtual ~Strategy() = default;
  virtual std::string_view name() const = 0;
  // Smallest manifold the strategy can draw from.
  virtual size_t min_population() const = 0;
  virtual Candidate Propose(std::span<const ManifoldEntry> manifold,
                            Rng& rng) const = 0;
};

// Pairwise affine blend; covers interpolation and extrapolation.
class PairBlendStrategy final : public Strategy {
 public:
  PairBlendStrategy(StrategyKind kind, double lambda_min, double lambda_max,
                    bool renormalize);

  std::string_view name() const override { return ToString(kind_); }
  size_t min_population() const override { return 2; }
  Candidate Propose(std::span<const ManifoldEntry> manifold,
                    Rng& rng) const override;

 private:
  StrategyKind kind_;
  double lambda_min_;
  double lambda_max_;
  bool renormalize_;
};

// Isotropic Gaussian step around one parent. sigma == 0 is allowed here and
// yields exact copies.
class NoiseStrategy final : public Strategy {
 public:
  NoiseStrategy(double sigma, bool renormalize);

  std::string_view name() const override { return "noise"; }
  size_t min_population() const override { return 1; }
  Candidate Propose(std::span<const ManifoldEntry> manifold,
                    Rng& rng) const override;

  double sigma() const { return sigma_; }

 private:
  double sigma_;
  bool renormalize_;
};

// Builds the strategy for `config`, resolving the default noise scale
// against `manifold`.
std::unique_ptr<Strategy> MakeStrategy(const StrategyConfig& config,
                                       std::span<const ManifoldEntry> manifold);

// Two distinct indices drawn uniformly without replacement.
std::pair<size_t, size_t> SamplePairIndices(size_t population, Rng& rng);
std::pair<std::string, std::string> SamplePair(
    std::span<const std::string> manifold_ids, Rng& rng);

double LambdaDraw(double lambda_min, double lambda_max, Rng& rng);

// Emits exactly expansion_factor x |manifold| candidates.
CandidateBatch GenerateCandidates(std::span<const ManifoldEntry> manifold,
                                  const Strategy& strategy,
                                  const ExpansionSchedule& schedule, Rng& rng,
                                  int stage_index = 0);

// Convenience overload seeding a fresh generator from config.rng_seed.
CandidateBatch GenerateCandidates(std::span<const ManifoldEntry> manifold,
                                  const StrategyConfig& config,
                                  const ExpansionSchedule& schedule,
                                  int stage_index = 0);

using ParentLookup = std::function<const Embedding&(const std::string& id)>;

// Rebuilds a candidate embedding from its provenance alone.
Embedding ReplayCandidate(const Provenance& provenance,
                          const ParentLookup& parent);

}  // namespace ideonaut::exploration

#endif  // IDEONAUT_EXPLORATION_STRATEGY_H_
