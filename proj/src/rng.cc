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

#include "ideonaut/rng.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "ideonaut/error.h"

namespace ideonaut {

double Rng::Uniform01() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::Uniform(double lo, double hi) {
  if (!(lo <= hi)) throw InvalidArgumentError("uniform bounds inverted");
  if (lo == hi) return lo;
  return std::clamp(std::lerp(lo, hi, Uniform01()), lo, hi);
}

size_t Rng::UniformIndex(size_t n) {
  if (n == 0) throw InvalidArgumentError("uniform index over empty range");
  const uint64_t bound = static_cast<uint64_t>(n);
  // Largest multiple of n that fits; draws above it are rejected.
  const uint64_t limit =
      std::numeric_limits<uint64_t>::max() -
      std::numeric_limits<uint64_t>::max() % bound;
  uint64_t draw;
  do {
    draw = engine_();
  } while (draw >= limit);
  return static_cast<size_t>(draw % bound);
}

double Rng::Gaussian() {
  const double u1 = 1.0 - Uniform01();  // (0, 1]
  const double u2 = Uniform01();
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

uint64_t MixSeed(uint64_t value) {
  uint64_t z = value + 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

uint64_t DeriveSeed(uint64_t base, uint64_t a, uint64_t b) {
  return MixSeed(MixSeed(MixSeed(base) ^ a) ^ b);
}

}  // namespace ideonaut
