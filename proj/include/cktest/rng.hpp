// Copyright 2026 The cktest Authors
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
#include <string_view>

namespace cktest {

/// Identifies one independent random stream: (master seed, stream index).
///
/// The pair itself is the derived seed, so derivation is injective by
/// construction. Streams used by the harness are built with `stream_key`.
struct SeedPair {
  std::uint64_t master = 0;
  std::uint64_t stream = 0;

  friend bool operator==(const SeedPair&, const SeedPair&) = default;
};

/// Stream index for a harness trial: high 32 bits carry n, low 32 bits the
/// trial index. `kGenerationTrial` is reserved for instance generation.
inline constexpr std::uint32_t kGenerationTrial = 0xFFFFFFFFu;

constexpr std::uint64_t stream_key(std::uint32_t n, std::uint32_t trial) {
  return (static_cast<std::uint64_t>(n) << 32) | trial;
}

/// Seedable random source with a fixed, documented algorithm:
///
///  * engine: std::mt19937_64 (bit-exact across standard libraries),
///    seeded through std::seed_seq with the four 32-bit halves
///    {master.lo, master.hi, stream.lo, stream.hi} (substreams: see below);
///  * bounded integers: Lemire's multiply-shift with rejection, so the
///    mapping from engine output to [0, bound) does not depend on the
///    standard library's distribution implementation;
///  * reals: top 53 bits of one engine output scaled by 2^-53.
class Rng {
 public:
  explicit Rng(SeedPair seed) : seed_(seed) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed.master),
                      static_cast<std::uint32_t>(seed.master >> 32),
                      static_cast<std::uint32_t>(seed.stream),
                      static_cast<std::uint32_t>(seed.stream >> 32)};
    engine_.seed(seq);
  }
  explicit Rng(std::uint64_t master, std::uint64_t stream = 0)
      : Rng(SeedPair{master, stream}) {}

  SeedPair seed() const { return seed_; }

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    __extension__ using u128 = unsigned __int128;
    u128 product = static_cast<u128>(engine_()) * bound;
    auto low = static_cast<std::uint64_t>(product);
    if (low < bound) {
      const std::uint64_t threshold = (0 - bound) % bound;
      while (low < threshold) {
        product = static_cast<u128>(engine_()) * bound;
        low = static_cast<std::uint64_t>(product);
      }
    }
    return static_cast<std::uint64_t>(product >> 64);
  }

  /// Uniform integer in [lo, hi], inclusive.
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) {
    return lo + below(hi - lo + 1);
  }

  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  bool bernoulli(double p) {
    if (p >= 1.0) return true;
    if (p <= 0.0) return false;
    return uniform01() < p;
  }

  bool coin() { return (engine_() >> 63) != 0; }

  /// Independent child stream, e.g. one per repetition inside a tester.
  Rng split(std::uint64_t child) {
    return Rng(SeedPair{seed_.master ^ next_u64(), child});
  }

  /// Stream keyed by (this seed, purpose, index). Unlike `split`, it does
  /// not depend on how much of this stream has been consumed, so iteration
  /// i of a tester draws the same numbers whatever earlier iterations did.
  Rng substream(std::uint32_t purpose, std::uint64_t index) const {
    return Rng(seed_, purpose, index);
  }

 private:
  // Substreams are created once per tester iteration, so they skip
  // std::seed_seq (slow for a 312-word state) and seed the engine with one
  // 64-bit word: a splitmix64-style fold of (master, stream, purpose, index).
  Rng(SeedPair seed, std::uint32_t purpose, std::uint64_t index) : seed_(seed) {
    std::uint64_t h = mix(seed.master ^ 0x6a09e667f3bcc909ULL);
    h = mix(h ^ seed.stream);
    h = mix(h ^ (static_cast<std::uint64_t>(purpose) << 32 | 0x5bd1e995U));
    h = mix(h ^ index);
    engine_.seed(h);
  }

  static constexpr std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  SeedPair seed_;
  std::mt19937_64 engine_;
};

/// Fisher-Yates with `Rng::below`; used wherever a permutation is needed
/// so results never depend on std::shuffle's unspecified algorithm.
template <typename RandomIt>
void shuffle(RandomIt first, RandomIt last, Rng& rng) {
  const auto count = last - first;
  for (auto i = count - 1; i > 0; --i) {
    const auto j = static_cast<decltype(i)>(
        rng.below(static_cast<std::uint64_t>(i) + 1));
    using std::swap;
    swap(first[i], first[j]);
  }
}

}  // namespace cktest
