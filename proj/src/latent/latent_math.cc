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

#include "ideonaut/latent/latent_math.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "ideonaut/error.h"
#include "ideonaut/rng.h"

namespace ideonaut::latent {
namespace {

void CheckSameDim(const Embedding& a, const Embedding& b) {
  if (a.dim() != b.dim()) {
    throw InvalidArgumentError("dimension mismatch: " + std::to_string(a.dim()) +
                               " vs " + std::to_string(b.dim()));
  }
}

bool InUnitInterval(double lambda) { return lambda >= 0.0 && lambda <= 1.0; }

// std::lerp(b, a, t) == b + t (a - b) evaluated so that t = 0 gives b,
// t = 1 gives a, and results for t in [0, 1] stay between the two.
Embedding AffineBlend(const Embedding& a, const Embedding& b, double lambda) {
  std::vector<double> out(a.dim());
  for (size_t k = 0; k < a.dim(); ++k) {
    out[k] = std::lerp(b[k], a[k], lambda);
  }
  return Embedding(std::move(out));
}

}  // namespace

Embedding Interpolate(const Embedding& a, const Embedding& b,
                      InterpolationParams params) {
  CheckSameDim(a, b);
  if (!InUnitInterval(params.lambda)) {
    throw InvalidArgumentError("interpolation requires lambda in [0, 1]");
  }
  return AffineBlend(a, b, params.lambda);
}

Embedding Extrapolate(const Embedding& a, const Embedding& b,
                      InterpolationParams params) {
  CheckSameDim(a, b);
  if (!std::isfinite(params.lambda) || InUnitInterval(params.lambda)) {
    throw InvalidArgumentError("extrapolation requires lambda outside [0, 1]");
  }
  return AffineBlend(a, b, params.lambda);
}

Embedding Perturb(const Embedding& a, PerturbationParams params) {
  if (!(params.sigma >= 0.0) || !std::isfinite(params.sigma)) {
    throw InvalidArgumentError("perturbation sigma must be non-negative");
  }
  if (params.sigma == 0.0) return a;
  Rng rng(params.rng_seed);
  std::vector<double> out(a.dim());
  for (size_t k = 0; k < a.dim(); ++k) {
    out[k] = a[k] + params.sigma * rng.Gaussian();
  }
  return Embedding(std::move(out));
}

double Dot(const Embedding& a, const Embedding& b) {
  CheckSameDim(a, b);
  double sum = 0.0;
  for (size_t k = 0; k < a.dim(); ++k) sum += a[k] * b[k];
  return sum;
}

double Norm(const Embedding& a) {
  double sum = 0.0;
  for (double v : a.values()) sum += v * v;
  return std::sqrt(sum);
}

double EuclideanDistance(const Embedding& a, const Embedding& b) {
  CheckSameDim(a, b);
  double sum = 0.0;
  for (size_t k = 0; k < a.dim(); ++k) {
    const double d = a[k] - b[k];
    sum += d * d;
  }
  return std::sqrt(sum);
}

double CosineSimilarity(const Embedding& a, const Embedding& b) {
  CheckSameDim(a, b);
  const double na = Norm(a);
  const double nb = Norm(b);
  if (na == 0.0 || nb == 0.0) {
    throw InvalidArgumentError("cosine similarity of a zero-norm embedding");
  }
  return std::clamp(Dot(a, b) / (na * nb), -1.0, 1.0);
}

Embedding Renormalize(const Embedding& a) {
  const double n = Norm(a);
  if (n == 0.0) throw InvalidArgumentError("cannot renormalize a zero vector");
  std::vector<double> out(a.values().begin(), a.values().end());
  for (double& v : out) v /= n;
  return Embedding(std::move(out));
}

}  // namespace ideonaut::latent
