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

#include "ideonaut/latent/embedding.h"

#include <cmath>

#include "ideonaut/error.h"

namespace ideonaut {
namespace {

void CheckFinite(std::span<const double> values) {
  for (double v : values) {
    if (!std::isfinite(v)) {
      throw InvalidArgumentError("embedding contains a non-finite value");
    }
  }
}

}  // namespace

Embedding::Embedding(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) throw InvalidArgumentError("embedding must be non-empty");
  CheckFinite(values_);
}

Embedding::Embedding(std::initializer_list<double> values)
    : Embedding(std::vector<double>(values)) {}

Embedding Embedding::FromFloats(std::span<const float> values) {
  return Embedding(std::vector<double>(values.begin(), values.end()));
}

std::vector<float> Embedding::ToFloats() const {
  return std::vector<float>(values_.begin(), values_.end());
}

}  // namespace ideonaut
