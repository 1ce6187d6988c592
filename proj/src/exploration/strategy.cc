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

#include "ideonaut/exploration/strategy.h"

#include <cmath>
#include <string>

#include "ideonaut/error.h"
#include "ideonaut/latent/latent_math.h"

namespace ideonaut::exploration {
namespace {

bool Overlaps01(double lo, double hi) { return lo <= 1.0 && hi >= 0.0; }

Embedding MaybeRenormalize(Embedding e, bool renormalize) {
  return renormalize ? latent::Renormalize(e) : e;
}

Embedding Blend(Origin origin, const Embedding& a, const Embedding& b,
                double lambda) {
  return origin == Origin::kInterpolation
             ? latent::Interpolate(a, b, {lambda})
             : latent::Extrapolate(a, b, {lambda});
}

}  // namespace

std::string_view ToString(StrategyKind kind) {
  switch (kind) {
    case StrategyKind::kInterpolation: return "interpolation";
    case StrategyKind::kExtrapolation: return "extrapolation";
    case StrategyKind::kNoise: return "noise";
  }
  return "unknown";
}

StrategyKind ParseStrategyKind(std::string_view name) {
  if (name == "interpolation") return StrategyKind::kInterpolation;
  if (name == "extrapolation") return StrategyKind::kExtrapolation;
  if (name == "noise") return StrategyKind::kNoise;
  throw InvalidArgumentError("unknown strategy kind: " + std::string(name));
}

std::string_view ToString(Origin origin) {
  switch (origin) {
    case Origin::kSeed: return "seed";
    case Origin::kInterpolation: return "interpolation";
    case Origin::kExtrapolation: return "extrapolation";
    case Origin::kNoise: return "noise";
  }
  return "unknown";
}

Origin ParseOrigin(std::string_view name) {
  if (name == "seed") return Origin::kSeed;
  if (name == "interpolation") return Origin::kInterpolation;
  if (name == "extrapolation") return Origin::kExtrapolation;
  if (name == "noise") return Origin::kNoise;
  throw InvalidArgumentError("unknown origin: " + std::string(name));
}

void StrategyConfig::Validate() const {
  switch (kind) {
    case StrategyKind::kInterpolation:
      if (!(0.0 <= lambda_min && lambda_min <= lambda_max &&
            lambda_max <= 1.0)) {
        throw InvalidArgumentError(
            "interpolation requires 0 <= lambda_min <= lambda_max <= 1");
      }
      break;
    case StrategyKind::kExtrapolation:
      if (!std::isfinite(lambda_min) || !std::isfinite(lambda_max) ||
          lambda_min > lambda_max || Overlaps01(lambda_min, lambda_max)) {
        throw InvalidArgumentError(
            "extrapolation requires a lambda range disjoint from [0, 1]");
      }
      break;
    case StrategyKind::kNoise:
      if (sigma.has_value() && !(*sigma > 0.0 && std::isfinite(*sigma))) {
        throw InvalidArgumentError("noise strategy requires sigma > 0");
      }
      break;
  }
}

void ExpansionSchedule::Validate() const {
  if (expansion_factor < 1) {
    throw InvalidArgumentError("expansion_factor must be >= 1");
  }
  if (stages_per_iteration < 1) {
    throw InvalidArgumentError("stages_per_iteration must be >= 1");
  }
}

PairBlendStrategy::PairBlendStrategy(StrategyKind kind, double lambda_min,
                                     double lambda_max, bool renormalize)
    : kind_(kind),
      lambda_min_(lambda_min),
      lambda_max_(lambda_max),
      renormalize_(renormalize) {
  if (kind == StrategyKind::kNoise) {
    throw InvalidArgumentError("pair blend cannot run the noise strategy");
  }
  StrategyConfig{.kind = kind,
                 .lambda_min = lambda_min,
                 .lambda_max = lambda_max}
      .Validate();
}

Candidate PairBlendStrategy::Propose(std::span<const ManifoldEntry> manifold,
                                     Rng& rng) const {
  const auto [i, j] = SamplePairIndices(manifold.size(), rng);
  const double lambda = LambdaDraw(lambda_min_, lambda_max_, rng);
  const Origin origin = kind_ == StrategyKind::kInterpolation
                            ? Origin::kInterpolation
                            : Origin::kExtrapolation;
  Candidate c;
  c.embedding = MaybeRenormalize(
      Blend(origin, manifold[i].embedding, manifold[j].embedding, lambda),
      renormalize_);
  c.provenance.origin = origin;
  c.provenance.parents = {manifold[i].id, manifold[j].id};
  c.provenance.lambda = lambda;
  c.provenance.renormalized = renormalize_;
  return c;
}

NoiseStrategy::NoiseStrategy(double sigma, bool renormalize)
    : sigma_(sigma), renormalize_(renormalize) {
  if (!(sigma >= 0.0) || !std::isfinite(sigma)) {
    throw InvalidArgumentError("noise sigma must be non-negative");
  }
}

Candidate NoiseStrategy::Propose(std::span<const ManifoldEntry> manifold,
                                 Rng& rng) const {
  if (manifold.empty()) throw InvalidArgumentError("empty manifold");
  const size_t i = rng.UniformIndex(manifold.size());
  const uint64_t noise_seed = rng.NextU64();
  Candidate c;
  c.embedding = MaybeRenormalize(
      latent::Perturb(manifold[i].embedding, {sigma_, noise_seed}),
      renormalize_);
  c.provenance.origin = Origin::kNoise;
  c.provenance.parents = {manifold[i].id};
  c.provenance.sigma = sigma_;
  c.provenance.noise_seed = noise_seed;
  c.provenance.renormalized = renormalize_;
  return c;
}

std::unique_ptr<Strategy> MakeStrategy(
    const StrategyConfig& config, std::span<const ManifoldEntry> manifold) {
  config.Validate();
  if (config.kind != StrategyKind::kNoise) {
    return std::make_unique<PairBlendStrategy>(
        config.kind, config.lambda_min, config.lambda_max, config.renormalize);
  }
  double sigma = 0.0;
  if (config.sigma.has_value()) {
    sigma = *config.sigma;
  } else {
    if (manifold.empty()) throw InvalidArgumentError("empty manifold");
    double total = 0.0;
    for (const auto& entry : manifold) total += latent::Norm(entry.embedding);
    sigma = kDefaultRelativeSigma * total / static_cast<double>(manifold.size());
  }
  return std::make_unique<NoiseStrategy>(sigma, config.renormalize);
}

std::pair<size_t, size_t> SamplePairIndices(size_t population, Rng& rng) {
  if (population < 2) throw InvalidArgumentError("insufficient population");
  const size_t first = rng.UniformIndex(population);
  size_t second = rng.UniformIndex(population - 1);
  if (second >= first) ++second;
  return {first, second};
}

std::pair<std::string, std::string> SamplePair(
    std::span<const std::string> manifold_ids, Rng& rng) {
  const auto [i, j] = SamplePairIndices(manifold_ids.size(), rng);
  return {manifold_ids[i], manifold_ids[j]};
}

double LambdaDraw(double lambda_min, double lambda_max, Rng& rng) {
  if (!(lambda_min <= lambda_max)) {
    throw InvalidArgumentError("lambda bounds inverted");
  }
  return rng.Uniform(lambda_min, lambda_max);
}

CandidateBatch GenerateCandidates(std::span<const ManifoldEntry> manifold,
                                  const Strategy& strategy,
                                  const ExpansionSchedule& schedule, Rng& rng,
                                  int stage_index) {
  schedule.Validate();
  if (manifold.empty()) throw InvalidArgumentError("empty manifold");
  if (manifold.size() < strategy.min_population()) {
    throw InvalidArgumentError("insufficient population");
  }
  CandidateBatch batch;
  batch.stage_index = stage_index;
  const size_t count =
      static_cast<size_t>(schedule.expansion_factor) * manifold.size();
  batch.candidates.reserve(count);
  for (size_t n = 0; n < count; ++n) {
    batch.candidates.push_back(strategy.Propose(manifold, rng));
  }
  return batch;
}

CandidateBatch GenerateCandidates(std::span<const ManifoldEntry> manifold,
                                  const StrategyConfig& config,
                                  const ExpansionSchedule& schedule,
                                  int stage_index) {
  if (manifold.empty()) throw InvalidArgumentError("empty manifold");
  const auto strategy = MakeStrategy(config, manifold);
  Rng rng(config.rng_seed);
  return GenerateCandidates(manifold, *strategy, schedule, rng, stage_index);
}

Embedding ReplayCandidate(const Provenance& provenance,
                          const ParentLookup& parent) {
  Embedding raw;
  switch (provenance.origin) {
    case Origin::kSeed:
      throw InvalidArgumentError("seed records have no construction to replay");
    case Origin::kInterpolation:
    case Origin::kExtrapolation:
      if (provenance.parents.size() != 2 || !provenance.lambda) {
        throw InvalidArgumentError("blend provenance needs 2 parents and lambda");
      }
      raw = Blend(provenance.origin, parent(provenance.parents[0]),
                  parent(provenance.parents[1]), *provenance.lambda);
      break;
    case Origin::kNoise:
      if (provenance.parents.size() != 1 || !provenance.sigma ||
          !provenance.noise_seed) {
        throw InvalidArgumentError(
            "noise provenance needs 1 parent, sigma and noise seed");
      }
      raw = latent::Perturb(parent(provenance.parents[0]),
                            {*provenance.sigma, *provenance.noise_seed});
      break;
  }
  return MaybeRenormalize(std::move(raw), provenance.renormalized);
}

}  // namespace ideonaut::exploration
