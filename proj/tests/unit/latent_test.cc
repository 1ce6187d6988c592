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

#include <cmath>
#include <random>
#include <vector>

#include "ideonaut/error.h"
#include "ideonaut/latent/embedding.h"
#include "ideonaut/latent/latent_math.h"
#include "ideonaut/rng.h"
#include "oracles.h"
#include "test_util.h"

namespace ideonaut {
namespace {

using latent::CosineSimilarity;
using latent::Extrapolate;
using latent::Interpolate;
using latent::Perturb;
using latent::Renormalize;
using testing::AffineOracle;
using testing::AllRelClose;
using testing::RandomEmbedding;
using testing::RelClose;

TEST_CASE("embedding rejects empty and non-finite input") {
  CHECK_THROWS_AS(Embedding(std::vector<double>{}), InvalidArgumentError);
  CHECK_THROWS_AS(Embedding({1.0, NAN}), InvalidArgumentError);
  CHECK_THROWS_AS(Embedding({INFINITY}), InvalidArgumentError);
  const Embedding e = Embedding::FromFloats(std::vector<float>{0.5f, -2.0f});
  CHECK(e == Embedding({0.5, -2.0}));
  CHECK(e.ToFloats() == std::vector<float>{0.5f, -2.0f});
}

TEST_CASE("rng is reproducible and stays in range") {
  Rng a(42), b(42);
  for (int i = 0; i < 1000; ++i) {
    const double u = a.Uniform01();
    CHECK(u == b.Uniform01());
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
  Rng c(9);
  for (int i = 0; i < 1000; ++i) {
    const double x = c.Uniform(0.45, 0.55);
    CHECK(x >= 0.45);
    CHECK(x <= 0.55);
    CHECK(c.UniformIndex(3) < 3);
  }
  CHECK(DeriveSeed(1, 2, 3) == DeriveSeed(1, 2, 3));
  CHECK(DeriveSeed(1, 2, 3) != DeriveSeed(1, 3, 2));
  CHECK(MixSeed(0) != MixSeed(1));
}

TEST_CASE("rng gaussian moments") {
  Rng rng(123);
  const int n = 200000;
  double sum = 0.0, sum_sq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double g = rng.Gaussian();
    sum += g;
    sum_sq += g * g;
  }
  const double mean = sum / n;
  CHECK(std::abs(mean) < 0.01);
  CHECK(std::abs(sum_sq / n - mean * mean - 1.0) < 0.02);
}

TEST_CASE("interpolate examples") {
  CHECK(Interpolate({1, 0}, {0, 1}, {1.0}) == Embedding({1, 0}));
  CHECK(Interpolate({2, 0}, {0, 2}, {0.5}) == Embedding({1, 1}));
  const Embedding a{1, 2, 3}, b{4, 5, 6};
  const Embedding r = Interpolate(a, b, {0.45});
  // 0.45*1 + 0.55*4 = 2.65, and so on.
  CHECK(AllRelClose(r.values(), AffineOracle(a, b, 0.45), 1e-12));
  CHECK(AllRelClose(r.values(), std::vector<double>{2.65, 3.65, 4.65}, 1e-12));
}

TEST_CASE("interpolate errors") {
  CHECK_THROWS_AS(Interpolate({1, 2}, {1}, {0.5}), InvalidArgumentError);
  CHECK_THROWS_AS(Interpolate({1}, {2}, {1.5}), InvalidArgumentError);
  CHECK_THROWS_AS(Interpolate({1}, {2}, {-0.1}), InvalidArgumentError);
}

TEST_CASE("extrapolate examples") {
  const Embedding r1 = Extrapolate({1, 0}, {0, 1}, {1.5});
  CHECK(AllRelClose(r1.values(), std::vector<double>{1.5, -0.5}, 1e-12));
  const Embedding r2 = Extrapolate({2}, {0}, {-0.5});
  CHECK(AllRelClose(r2.values(), std::vector<double>{-1.0}, 1e-12));
  CHECK(Extrapolate({1, 1}, {1, 1}, {2.0}) == Embedding({1, 1}));
  CHECK_THROWS_AS(Extrapolate({1}, {2}, {0.5}), InvalidArgumentError);
  CHECK_THROWS_AS(Extrapolate({1}, {2}, {1.0}), InvalidArgumentError);
  CHECK_THROWS_AS(Extrapolate({1, 2}, {2}, {2.0}), InvalidArgumentError);
}

TEST_CASE("extrapolation leaves the segment") {
  std::mt19937 gen(5);
  std::uniform_real_distribution<double> outside(1.05, 3.0);
  for (int i = 0; i < 200; ++i) {
    const Embedding a = RandomEmbedding(gen, 4), b = RandomEmbedding(gen, 4);
    const double lambda = (i % 2 == 0) ? outside(gen) : 1.0 - outside(gen);
    const Embedding r = Extrapolate(a, b, {lambda});
    CHECK(AllRelClose(r.values(), AffineOracle(a, b, lambda), 1e-12));
    // Outside the segment: some coordinate leaves the parents' box.
    bool outside_box = false;
    for (size_t k = 0; k < 4; ++k) {
      outside_box |= r[k] < std::min(a[k], b[k]) || r[k] > std::max(a[k], b[k]);
    }
    CHECK(outside_box);
  }
}

TEST_CASE("interpolation properties on random triples") {
  std::mt19937 gen(2024);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const size_t dim = 1 + gen() % 32;
    const Embedding a = RandomEmbedding(gen, dim), b = RandomEmbedding(gen, dim);
    const double lambda = unit(gen);
    const Embedding r = Interpolate(a, b, {lambda});
    REQUIRE(AllRelClose(r.values(), AffineOracle(a, b, lambda), 1e-12));
    REQUIRE(AllRelClose(r.values(), Interpolate(b, a, {1.0 - lambda}).values(),
                        1e-12));
    for (size_t k = 0; k < dim; ++k) {
      REQUIRE(r[k] >= std::min(a[k], b[k]));
      REQUIRE(r[k] <= std::max(a[k], b[k]));
    }
    REQUIRE(Interpolate(a, b, {1.0}) == a);
    REQUIRE(Interpolate(a, b, {0.0}) == b);
  }
}

TEST_CASE("perturb") {
  CHECK(Perturb({3, 4}, {0.0, 99}) == Embedding({3, 4}));
  CHECK_THROWS_AS(Perturb({1}, {-0.1, 1}), InvalidArgumentError);

  // Regenerate the noise with the documented generator.
  const Embedding r = Perturb({0, 0}, {1.0, 7});
  Rng rng(7);
  const double e0 = rng.Gaussian();
  const double e1 = rng.Gaussian();
  CHECK(r == Embedding({e0, e1}));
  CHECK(Perturb({0, 0}, {1.0, 7}) == r);
  CHECK(Perturb({0, 0}, {1.0, 8}) != r);
}

TEST_CASE("perturb statistics over 10000 draws") {
  const int n = 10000;
  double sum = 0.0, sum_sq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = Perturb({0.0}, {0.1, static_cast<uint64_t>(i)})[0];
    sum += x;
    sum_sq += x * x;
  }
  const double mean = sum / n;
  const double sd = std::sqrt(sum_sq / n - mean * mean);
  CHECK(std::abs(mean) < 0.004);
  CHECK(std::abs(sd - 0.1) < 0.01);
}

TEST_CASE("cosine similarity") {
  CHECK(CosineSimilarity({1, 0}, {1, 0}) == doctest::Approx(1.0));
  CHECK(CosineSimilarity({1, 0}, {0, 1}) == doctest::Approx(0.0));
  CHECK(CosineSimilarity({1, 2}, {2, 4}) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(CosineSimilarity({0, 0}, {1, 0}), InvalidArgumentError);
  CHECK_THROWS_AS(CosineSimilarity({1}, {1, 0}), InvalidArgumentError);

  std::mt19937 gen(3);
  std::uniform_real_distribution<double> scale(0.01, 100.0);
  for (int i = 0; i < 200; ++i) {
    const Embedding a = RandomEmbedding(gen, 8), b = RandomEmbedding(gen, 8);
    CHECK(RelClose(CosineSimilarity(a, a), 1.0, 1e-9));
    const double s = scale(gen);
    std::vector<double> scaled(a.values().begin(), a.values().end());
    for (double& x : scaled) x *= s;
    CHECK(RelClose(CosineSimilarity(Embedding(scaled), b),
                   CosineSimilarity(a, b), 1e-9));
    const double c = CosineSimilarity(a, b);
    CHECK(c >= -1.0);
    CHECK(c <= 1.0);
  }
}

TEST_CASE("renormalize") {
  CHECK(AllRelClose(Renormalize({3, 4}).values(), std::vector<double>{0.6, 0.8},
                    1e-12));
  CHECK(Renormalize({0, 0, 5}) == Embedding({0, 0, 1}));
  CHECK_THROWS_AS(Renormalize({0, 0}), InvalidArgumentError);
  std::mt19937 gen(11);
  for (int i = 0; i < 100; ++i) {
    const Embedding u = Renormalize(RandomEmbedding(gen, 16));
    CHECK(RelClose(latent::Norm(u), 1.0, 1e-9));
    CHECK(AllRelClose(Renormalize(u).values(), u.values(), 1e-9));
  }
}

}  // namespace
}  // namespace ideonaut
