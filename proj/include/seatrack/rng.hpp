// Copyright 2025 the seatrack authors
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

#ifndef SEATRACK_RNG_HPP
#define SEATRACK_RNG_HPP

#include <cmath>
#include <cstdint>
#include <utility>

#include "seatrack/common.hpp"

namespace seatrack {

/// SplitMix64 step; used for seed expansion and sub-stream derivation.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Deterministically combines a base seed with up to two labels. Used to
/// derive independent sub-streams (per sensor, per run) from a master seed.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b = 0) {
  std::uint64_t s = base;
  std::uint64_t h = splitmix64(s);
  s ^= a * 0x9e3779b97f4a7c15ULL;
  h ^= splitmix64(s);
  s ^= b * 0xc2b2ae3d27d4eb4fULL;
  h ^= splitmix64(s);
  return h;
}

/// Seeded counter-free PRNG (xoshiro256++) with explicit, documented draw
/// order for every sampler. All randomness in the library flows through
/// this type so that runs are reproducible bit-for-bit across platforms,
/// independent of the standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed) {
    std::uint64_t sm = seed;
    for (auto& w : s_) w = splitmix64(sm);
  }

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  /// Uniform double in [0, 1), 53-bit resolution.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + uniform() * (hi - lo); }

  /// Integer in [0, n), n >= 1.
  std::uint64_t uniform_index(std::uint64_t n) {
    return static_cast<std::uint64_t>((static_cast<__uint128_t>(next_u64()) * n) >> 64);
  }

  /// One Box-Muller pair; consumes exactly two uniforms.
  std::pair<double, double> normal2() {
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * kPi * u2;
    return {r * std::cos(a), r * std::sin(a)};
  }

  /// Single standard normal; consumes two uniforms (no cached spare).
  double normal() { return normal2().first; }

  double normal(double mean, double stddev) { return mean + stddev * normal(); }

  /// Poisson sample by Knuth's product method, chunked so large means
  /// stay numerically safe. Draw count is variable but deterministic.
  long poisson(double mean) {
    long k = 0;
    while (mean > 0.0) {
      const double chunk = mean > 25.0 ? 25.0 : mean;
      mean -= chunk;
      const double limit = std::exp(-chunk);
      double p = 1.0;
      long kc = -1;
      do {
        ++kc;
        p *= uniform();
      } while (p > limit);
      k += kc;
    }
    return k;
  }

  /// Gamma(shape, 1) via Marsaglia-Tsang, with the standard boost for
  /// shape < 1.
  double gamma(double shape) {
    if (shape < 1.0) {
      const double u = 1.0 - uniform();  // (0, 1]
      return gamma(shape + 1.0) * std::pow(u, 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / (3.0 * std::sqrt(d));
    for (;;) {
      double x;
      double v;
      do {
        x = normal();
        v = 1.0 + c * x;
      } while (v <= 0.0);
      v = v * v * v;
      const double u = 1.0 - uniform();
      if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
      if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
    }
  }

  /// Beta(a, b) via the gamma ratio.
  double beta(double a, double b) {
    const double x = gamma(a);
    const double y = gamma(b);
    return x / (x + y);
  }

  /// Independent generator derived from this generator's original seed and
  /// the given labels; forking does not consume or disturb this stream.
  Rng fork(std::uint64_t a, std::uint64_t b = 0) const { return Rng(derive_seed(seed_, a, b)); }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

  std::uint64_t seed_;
  std::uint64_t s_[4];
};

}  // namespace seatrack

#endif  // SEATRACK_RNG_HPP
