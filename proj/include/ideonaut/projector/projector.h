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

#ifndef IDEONAUT_PROJECTOR_PROJECTOR_H_
#define IDEONAUT_PROJECTOR_PROJECTOR_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "ideonaut/latent/embedding.h"

namespace ideonaut::projector {

enum class Activation : uint8_t { kNone = 0, kRelu = 1, kGelu = 2 };

std::string_view ToString(Activation activation);

// One affine layer followed by an activation. `weight` is row-major
// out_dim x in_dim.
struct Layer {
  uint32_t in_dim = 0;
  uint32_t out_dim = 0;
  Activation activation = Activation::kNone;
  std::vector<float> weight;
  std::vector<float> bias;

  friend bool operator==(const Layer&, const Layer&) = default;
};

// Frozen map from encoder space (input_dim) to the decoder's token
// embedding space (output_dim). Immutable once constructed.
class ProjectorWeights {
 public:
  // Throws FormatError if the layer chain is empty, broken or non-finite.
  explicit ProjectorWeights(std::vector<Layer> layers);

  // Single identity layer; needs encoder dim == decoder dim.
  static ProjectorWeights Identity(size_t dim);

  size_t input_dim() const { return layers_.front().in_dim; }
  size_t output_dim() const { return layers_.back().out_dim; }
  std::span<const Layer> layers() const { return layers_; }

  friend bool operator==(const ProjectorWeights&,
                         const ProjectorWeights&) = default;

 private:
  std::vector<Layer> layers_;
};

// The soft token h_X handed to the decoder.
struct ProjectedLatent {
  std::vector<double> values;
};

inline constexpr std::string_view kMagic = "XPRJ1";
inline constexpr uint16_t kFormatVersion = 1;

// Reads an XPRJ1 stream:
//   "XPRJ1" | version u16 | layer count u16 |
//   per layer: in u32, out u32, activation u8, W f32[out*in], b f32[out]
// All little-endian. If `expected_output_dim` is given, the last layer's
// out_dim must match it.
ProjectorWeights LoadWeights(std::istream& in,
                             std::optional<size_t> expected_output_dim = {});
ProjectorWeights LoadWeightsFile(const std::filesystem::path& path,
                                 std::optional<size_t> expected_output_dim = {});

void SaveWeights(const ProjectorWeights& weights, std::ostream& out);
void SaveWeightsFile(const ProjectorWeights& weights,
                     const std::filesystem::path& path);

// v <- activation(W v + b) for every layer, in double precision.
ProjectedLatent Project(const Embedding& e, const ProjectorWeights& weights);

}  // namespace ideonaut::projector

#endif  // IDEONAUT_PROJECTOR_PROJECTOR_H_
