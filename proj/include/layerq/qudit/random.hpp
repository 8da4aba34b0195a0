// Copyright 2026 The layerq Authors
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

#pragma once

#include <cstdint>
#include <random>
#include <span>

namespace layerq {

using Rng = std::mt19937_64;

/// splitmix64 finalizer, used to derive independent seeds.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Seed of the sub-generator for one (session seed, round, stream) triple.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t round, std::uint64_t stream = 0) {
  return mix64(seed ^ mix64(round ^ mix64(stream + 0x632be59bd9b4e019ULL)));
}

inline Rng round_rng(std::uint64_t seed, std::uint64_t round, std::uint64_t stream = 0) {
  return Rng(derive_seed(seed, round, stream));
}

/// Uniform double in [0, 1) with 53 random bits. Bit-identical across
/// standard libraries, unlike std::uniform_real_distribution.
inline double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

inline bool bernoulli(Rng& rng, double p) { return uniform01(rng) < p; }

/// Uniform integer in [0, n) by rejection, portable across standard libraries.
inline std::uint64_t uniform_index(Rng& rng, std::uint64_t n) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do x = rng();
  while (x >= limit);
  return x % n;
}

/// Inverse-CDF draw from unnormalized nonnegative weights.
template <typename Real>
std::size_t sample_weights(Rng& rng, std::span<const Real> weights) {
  Real total = 0;
  for (Real w : weights) total += w;
  const Real u = static_cast<Real>(uniform01(rng)) * total;
  Real acc = 0;
  std::size_t last_positive = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] <= Real(0)) continue;
    acc += weights[i];
    last_positive = i;
    if (u < acc) return i;
  }
  return last_positive;
}

}  // namespace layerq
