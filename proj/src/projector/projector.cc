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

#include "ideonaut/projector/projector.h"

#include <array>
#include <bit>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>

#include "ideonaut/error.h"

namespace ideonaut::projector {
namespace {

class Reader {
 public:
  explicit Reader(std::istream& in) : in_(in) {}

  void Bytes(char* out, size_t n) {
    in_.read(out, static_cast<std::streamsize>(n));
    if (static_cast<size_t>(in_.gcount()) != n) {
      throw FormatError("truncated stream");
    }
  }

  template <typename T>
  T Uint() {
    std::array<unsigned char, sizeof(T)> raw{};
    Bytes(reinterpret_cast<char*>(raw.data()), raw.size());
    T value = 0;
    for (size_t i = 0; i < sizeof(T); ++i) {
      value |= static_cast<T>(static_cast<T>(raw[i]) << (8 * i));
    }
    return value;
  }

  float Float() { return std::bit_cast<float>(Uint<uint32_t>()); }

 private:
  std::istream& in_;
};

template <typename T>
void WriteUint(std::ostream& out, T value) {
  for (size_t i = 0; i < sizeof(T); ++i) {
    out.put(static_cast<char>((value >> (8 * i)) & 0xff));
  }
}

void WriteFloat(std::ostream& out, float value) {
  WriteUint(out, std::bit_cast<uint32_t>(value));
}

double Apply(Activation activation, double x) {
  switch (activation) {
    case Activation::kNone: return x;
    case Activation::kRelu: return x > 0.0 ? x : 0.0;
    // Exact (erf) form, not the tanh approximation.
    case Activation::kGelu: return 0.5 * x * (1.0 + std::erf(x / std::sqrt(2.0)));
  }
  return x;
}

// Guards against absurd headers allocating gigabytes before the
// truncation check can fire.
constexpr uint64_t kMaxLayerEntries = uint64_t{1} << 28;

}  // namespace

std::string_view ToString(Activation activation) {
  switch (activation) {
    case Activation::kNone: return "none";
    case Activation::kRelu: return "relu";
    case Activation::kGelu: return "gelu";
  }
  return "unknown";
}

ProjectorWeights::ProjectorWeights(std::vector<Layer> layers)
    : layers_(std::move(layers)) {
  if (layers_.empty()) throw FormatError("projector has no layers");
  for (size_t i = 0; i < layers_.size(); ++i) {
    const Layer& layer = layers_[i];
    if (layer.in_dim == 0 || layer.out_dim == 0) {
      throw FormatError("layer " + std::to_string(i) + " has a zero dimension");
    }
    if (layer.weight.size() !=
            static_cast<size_t>(layer.in_dim) * layer.out_dim ||
        layer.bias.size() != layer.out_dim) {
      throw FormatError("layer " + std::to_string(i) +
                        " parameter count does not match its shape");
    }
    if (i > 0 && layers_[i - 1].out_dim != layer.in_dim) {
      throw FormatError("dimension chain broken at layer " + std::to_string(i));
    }
    for (float w : layer.weight) {
      if (!std::isfinite(w)) throw FormatError("non-finite weight");
    }
    for (float b : layer.bias) {
      if (!std::isfinite(b)) throw FormatError("non-finite bias");
    }
  }
}

ProjectorWeights ProjectorWeights::Identity(size_t dim) {
  Layer layer;
  layer.in_dim = layer.out_dim = static_cast<uint32_t>(dim);
  layer.weight.assign(dim * dim, 0.0f);
  for (size_t k = 0; k < dim; ++k) layer.weight[k * dim + k] = 1.0f;
  layer.bias.assign(dim, 0.0f);
  return ProjectorWeights({std::move(layer)});
}

ProjectorWeights LoadWeights(std::istream& in,
                             std::optional<size_t> expected_output_dim) {
  Reader reader(in);
  std::array<char, 5> magic{};
  reader.Bytes(magic.data(), magic.size());
  if (std::string_view(magic.data(), magic.size()) != kMagic) {
    throw FormatError("bad magic bytes");
  }
  const uint16_t version = reader.Uint<uint16_t>();
  if (version != kFormatVersion) {
    throw FormatError("unsupported format version " + std::to_string(version));
  }
  const uint16_t layer_count = reader.Uint<uint16_t>();
  std::vector<Layer> layers(layer_count);
  for (Layer& layer : layers) {
    layer.in_dim = reader.Uint<uint32_t>();
    layer.out_dim = reader.Uint<uint32_t>();
    const uint8_t activation = reader.Uint<uint8_t>();
    if (activation > static_cast<uint8_t>(Activation::kGelu)) {
      throw FormatError("unknown activation code " + std::to_string(activation));
    }
    layer.activation = static_cast<Activation>(activation);
    const uint64_t entries = uint64_t{layer.in_dim} * layer.out_dim;
    if (entries > kMaxLayerEntries) throw FormatError("layer too large");
    layer.weight.resize(entries);
    for (float& w : layer.weight) w = reader.Float();
    layer.bias.resize(layer.out_dim);
    for (float& b : layer.bias) b = reader.Float();
  }
  if (in.peek() != std::char_traits<char>::eof()) {
    throw FormatError("trailing bytes after last layer");
  }
  ProjectorWeights weights(std::move(layers));
  if (expected_output_dim && weights.output_dim() != *expected_output_dim) {
    throw FormatError("dimension chain broken: projector emits " +
                      std::to_string(weights.output_dim()) +
                      " values, decoder expects " +
                      std::to_string(*expected_output_dim));
  }
  return weights;
}

ProjectorWeights LoadWeightsFile(const std::filesystem::path& path,
                                 std::optional<size_t> expected_output_dim) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open projector file: " + path.string());
  return LoadWeights(in, expected_output_dim);
}

void SaveWeights(const ProjectorWeights& weights, std::ostream& out) {
  out.write(kMagic.data(), static_cast<std::streamsize>(kMagic.size()));
  WriteUint<uint16_t>(out, kFormatVersion);
  WriteUint<uint16_t>(out, static_cast<uint16_t>(weights.layers().size()));
  for (const Layer& layer : weights.layers()) {
    WriteUint<uint32_t>(out, layer.in_dim);
    WriteUint<uint32_t>(out, layer.out_dim);
    WriteUint<uint8_t>(out, static_cast<uint8_t>(layer.activation));
    for (float w : layer.weight) WriteFloat(out, w);
    for (float b : layer.bias) WriteFloat(out, b);
  }
}

void SaveWeightsFile(const ProjectorWeights& weights,
                     const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write projector file: " + path.string());
  SaveWeights(weights, out);
}

ProjectedLatent Project(const Embedding& e, const ProjectorWeights& weights) {
  if (e.dim() != weights.input_dim()) {
    throw InvalidArgumentError("dimension mismatch: projector expects " +
                               std::to_string(weights.input_dim()) +
                               ", got " + std::to_string(e.dim()));
  }
  std::vector<double> v(e.values().begin(), e.values().end());
  for (const Layer& layer : weights.layers()) {
    std::vector<double> next(layer.out_dim);
    for (size_t r = 0; r < layer.out_dim; ++r) {
      const float* row = layer.weight.data() + r * layer.in_dim;
      double sum = 0.0;
      for (size_t c = 0; c < layer.in_dim; ++c) sum += row[c] * v[c];
      next[r] = Apply(layer.activation, sum + layer.bias[r]);
    }
    v = std::move(next);
  }
  for (double x : v) {
    if (!std::isfinite(x)) {
      throw InvariantError("projector produced a non-finite value");
    }
  }
  return ProjectedLatent{std::move(v)};
}

}  // namespace ideonaut::projector
