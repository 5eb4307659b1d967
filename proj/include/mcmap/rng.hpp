// Copyright 2026 The mcmap Authors
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

#include <array>
#include <bit>
#include <cstdint>
#include <utility>
#include <vector>

namespace mcmap {

/**
 * splitmix64 step. Used only to expand seeds into xoshiro state.
 */
inline std::uint64_t splitmix64(std::uint64_t &state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/**
 * xoshiro256** 1.0. The generated circuits are part of the reproducibility
 * contract, so the generator and the derived distributions below are pinned
 * here instead of going through <random>, whose distributions are
 * implementation-defined.
 */
class Xoshiro256 {
 public:
  explicit Xoshiro256(std::uint64_t seed) {
    std::uint64_t sm = seed;
    for (auto &word : s_) word = splitmix64(sm);
  }

  /**
   * Stream keyed by (stream tag, size, user seed). Distinct benchmark
   * families and sizes never share a stream for the same user seed.
   */
  static Xoshiro256 keyed(std::uint64_t tag, std::uint64_t size,
                          std::uint64_t seed) {
    std::uint64_t sm = tag;
    std::uint64_t key = splitmix64(sm);
    sm = key ^ size;
    key = splitmix64(sm);
    return Xoshiro256(key ^ seed);
  }

  std::uint64_t next() {
    const std::uint64_t result = std::rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = std::rotl(s_[3], 45);
    return result;
  }

  /** Uniform integer in [0, bound) by rejection; bound > 0. */
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = -bound % bound;  // 2^64 mod bound
    for (;;) {
      const std::uint64_t r = next();
      if (r >= limit) return r % bound;
    }
  }

  /** Uniform double in [0, 1) with 53 random bits. */
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /** In-place Fisher-Yates, walking from the back. */
  template <class T>
  void shuffle(std::vector<T> &items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      const auto j = static_cast<std::size_t>(below(i));
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::array<std::uint64_t, 4> s_{};
};

}  // namespace mcmap
