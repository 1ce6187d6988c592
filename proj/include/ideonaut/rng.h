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

#ifndef IDEONAUT_RNG_H_
#define IDEONAUT_RNG_H_

#include <cstddef>
#include <cstdint>
#include <random>

namespace ideonaut {

// Deterministic generator "ideonaut-rng/1".
//
// Bits come from std::mt19937_64, whose output sequence is fixed by the C++
// standard. Everything layered on top (uniform reals, bounded integers,
// Gaussians) is implemented here rather than with the <random> distributions,
// which are implementation-defined and would make runs differ between
// standard libraries:
//   * Uniform01: top 53 bits of one draw scaled by 2^-53, in [0, 1).
//   * UniformIndex(n): rejection sampling on the 64-bit draw (unbiased).
//   * Gaussian: Box-Muller, one draw pair per value, cosine branch only,
//     no cached second value. u1 is taken from (0, 1].
class Rng {
 public:
  static constexpr int kVersion = 1;

  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t NextU64() { return engine_(); }
  double Uniform01();
  // Uniform in [lo, hi]; never leaves the interval.
  double Uniform(double lo, double hi);
  // Uniform integer in [0, n). n must be positive.
  size_t UniformIndex(size_t n);
  // Standard normal draw.
  double Gaussian();

 private:
  std::mt19937_64 engine_;
};

// SplitMix64 finalizer; used to derive independent sub-seeds.
uint64_t MixSeed(uint64_t value);
uint64_t DeriveSeed(uint64_t base, uint64_t a, uint64_t b = 0);

}  // namespace ideonaut

#endif  // IDEONAUT_RNG_H_
