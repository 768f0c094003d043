// Copyright 2026 The tempowl Authors
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

#ifndef TEMPOWL_PRNG_H_
#define TEMPOWL_PRNG_H_

#include <cstdint>

namespace tempowl {

// SplitMix64 finaliser (Steele, Lea, Flood 2014). Used to derive
// independent stream seeds and for one-shot hashing of integers.
constexpr std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// 64-bit FNV-1a over a byte string.
constexpr std::uint64_t Fnv1a64(const char* data, std::uint64_t size) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (std::uint64_t i = 0; i < size; ++i) {
    h ^= static_cast<unsigned char>(data[i]);
    h *= 0x100000001B3ULL;
  }
  return h;
}

// xorshift64* (Vigna 2016): shifts 12, 25, 27, output multiplier
// 0x2545F4914F6CDD1D. State is seeded through SplitMix64 so that seed 0 is
// usable. The sequence is fully specified by these constants, so fixtures
// are reproducible in any language.
class Xorshift64Star {
 public:
  explicit Xorshift64Star(std::uint64_t seed) : state_(SplitMix64(seed)) {
    if (state_ == 0) state_ = 0x9E3779B97F4A7C15ULL;
  }

  std::uint64_t Next() {
    state_ ^= state_ >> 12;
    state_ ^= state_ << 25;
    state_ ^= state_ >> 27;
    return state_ * 0x2545F4914F6CDD1DULL;
  }

  // Uniform in [0, bound) by 128-bit multiply-shift (Lemire).
  std::uint64_t Below(std::uint64_t bound) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(Next()) * bound) >> 64);
  }

  // Uniform in [lo, hi].
  std::int64_t Between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(
                    Below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  // Bernoulli(p) using 53 random bits.
  bool Chance(double p) {
    return static_cast<double>(Next() >> 11) * 0x1.0p-53 < p;
  }

 private:
  std::uint64_t state_;
};

}  // namespace tempowl

#endif  // TEMPOWL_PRNG_H_
