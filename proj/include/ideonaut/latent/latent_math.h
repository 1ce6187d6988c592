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

#ifndef IDEONAUT_LATENT_LATENT_MATH_H_
#define IDEONAUT_LATENT_LATENT_MATH_H_

#include <cstdint>

#include "ideonaut/latent/embedding.h"

namespace ideonaut::latent {

struct InterpolationParams {
  double lambda = 0.5;
};

struct PerturbationParams {
  double sigma = 0.0;
  uint64_t rng_seed = 0;
};

// lambda * a + (1 - lambda) * b with lambda in [0, 1].
// Exact at both endpoints and bounded per coordinate by the parents.
Embedding Interpolate(const Embedding& a, const Embedding& b,
                      InterpolationParams params);

// Same affine blend with lambda outside [0, 1].
Embedding Extrapolate(const Embedding& a, const Embedding& b,
                      InterpolationParams params);

// a + eps, eps ~ N(0, sigma^2 I) drawn from Rng(params.rng_seed).
Embedding Perturb(const Embedding& a, PerturbationParams params);

double Dot(const Embedding& a, const Embedding& b);
double Norm(const Embedding& a);
double EuclideanDistance(const Embedding& a, const Embedding& b);
double CosineSimilarity(const Embedding& a, const Embedding& b);
Embedding Renormalize(const Embedding& a);

}  // namespace ideonaut::latent

#endif  // IDEONAUT_LATENT_LATENT_MATH_H_
