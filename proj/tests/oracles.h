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

// Independent reference implementations shared by the unit and acceptance
// tests. Nothing here calls into the library under test.
#ifndef IDEONAUT_TESTS_ORACLES_H_
#define IDEONAUT_TESTS_ORACLES_H_

#include <bit>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "ideonaut/eval/metrics.h"
#include "ideonaut/latent/embedding.h"
#include "test_util.h"

namespace ideonaut::testing {

// Per-coordinate affine blend in extended precision.
inline std::vector<double> AffineOracle(const Embedding& a, const Embedding& b,
                                 double lambda) {
  std::vector<double> out(a.dim());
  for (size_t k = 0; k < a.dim(); ++k) {
    const long double l = lambda;
    out[k] = static_cast<double>(l * a[k] + (1.0L - l) * b[k]);
  }
  return out;
}

// Oracle normalization: lowercase ASCII, words separated by one space.
inline std::string OracleNormalize(const std::string& s) {
  std::string out, word;
  for (char c : s + " ") {
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!word.empty()) {
        if (!out.empty()) out += ' ';
        out += word;
        word.clear();
      }
    } else {
      word += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
  }
  return out;
}

inline double OracleCosine(const Embedding& a, const Embedding& b) {
  double dot = 0, na = 0, nb = 0;
  for (size_t k = 0; k < a.dim(); ++k) {
    dot += a[k] * b[k];
    na += a[k] * a[k];
    nb += b[k] * b[k];
  }
  return dot / std::sqrt(na * nb);
}

// Full pairwise duplicate matrix, then keep i unless a kept j < i matches.
inline std::vector<size_t> BruteForceDedup(
    const std::vector<eval::DedupItem>& items) {
  const size_t n = items.size();
  std::vector<std::vector<bool>> dup(n, std::vector<bool>(n, false));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      bool d = OracleNormalize(items[i].text) == OracleNormalize(items[j].text);
      if (!d && items[i].embedding && items[j].embedding) {
        d = OracleCosine(*items[i].embedding, *items[j].embedding) >= 0.98;
      }
      dup[i][j] = d;
    }
  }
  std::vector<size_t> kept;
  for (size_t i = 0; i < n; ++i) {
    bool keep = true;
    for (size_t j : kept) keep = keep && !dup[i][j];
    if (keep) kept.push_back(i);
  }
  return kept;
}

// Random idea set of size <= 200 with planted text and near-embedding
// collisions; about one item in five has no embedding.
inline std::vector<eval::DedupItem> RandomDedupSet(std::mt19937& gen) {
  static const std::vector<std::string> words = {"brick", "door", "Stop", "paint",
                                                 "wall", "garden", "Bed", "warm"};
  std::uniform_real_distribution<double> noise(-0.12, 0.12);
  const size_t n = gen() % 201;
  std::vector<Embedding> centres;
  for (int k = 0; k < 6; ++k) centres.push_back(RandomEmbedding(gen, 4));
  std::vector<eval::DedupItem> items;
  for (size_t i = 0; i < n; ++i) {
    std::string text;
    const int len = 1 + static_cast<int>(gen() % 2);
    for (int w = 0; w < len; ++w) {
      std::string word = words[gen() % words.size()];
      if (gen() % 3 == 0) word[0] = static_cast<char>(std::toupper(word[0]));
      text += (gen() % 4 == 0 ? "  " : " ") + word;
    }
    eval::DedupItem item{.text = text};
    if (gen() % 5 != 0) {
      const Embedding& base = centres[gen() % centres.size()];
      std::vector<double> v(base.values().begin(), base.values().end());
      for (double& x : v) x += noise(gen);
      item.embedding = Embedding(v);
    }
    items.push_back(std::move(item));
  }
  return items;
}

// Independent XPRJ1 writer used as the format oracle.
class Bytes {
 public:
  Bytes& Raw(std::string_view s) {
    out_ += s;
    return *this;
  }
  Bytes& U8(uint8_t v) {
    out_.push_back(static_cast<char>(v));
    return *this;
  }
  Bytes& U16(uint16_t v) { return U8(v & 0xff).U8(v >> 8); }
  Bytes& U32(uint32_t v) { return U16(v & 0xffff).U16(v >> 16); }
  Bytes& F32(float f) { return U32(std::bit_cast<uint32_t>(f)); }
  std::string str() const { return out_; }

 private:
  std::string out_;
};

inline std::string IdentityFile(uint32_t d) {
  Bytes b;
  b.Raw("XPRJ1").U16(1).U16(1).U32(d).U32(d).U8(0);
  for (uint32_t r = 0; r < d; ++r) {
    for (uint32_t c = 0; c < d; ++c) b.F32(r == c ? 1.0f : 0.0f);
  }
  for (uint32_t r = 0; r < d; ++r) b.F32(0.0f);
  return b.str();
}

}  // namespace ideonaut::testing

#endif  // IDEONAUT_TESTS_ORACLES_H_
