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

#ifndef IDEONAUT_LATENT_EMBEDDING_H_
#define IDEONAUT_LATENT_EMBEDDING_H_

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace ideonaut {

// A point in the encoder's semantic space. Always non-empty and finite.
class Embedding {
 public:
  Embedding() = default;
  explicit Embedding(std::vector<double> values);
  Embedding(std::initializer_list<double> values);
  // Widens single-precision storage; math always runs in double.
  static Embedding FromFloats(std::span<const float> values);

  size_t dim() const { return values_.size(); }
  bool empty() const { return values_.empty(); }
  double operator[](size_t k) const { return values_[k]; }
  std::span<const double> values() const { return values_; }
  std::vector<float> ToFloats() const;

  friend bool operator==(const Embedding&, const Embedding&) = default;

 private:
  std::vector<double> values_;
};

}  // namespace ideonaut

#endif  // IDEONAUT_LATENT_EMBEDDING_H_
