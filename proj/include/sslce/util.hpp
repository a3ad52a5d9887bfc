/*
 * Copyright 2026 The sslce authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <bit>
#include <cstdint>

namespace sslce {

/// Deterministic 64-bit generator (splitmix64). Used everywhere instead of
/// std engines so that seeded runs are bit-identical across platforms.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform-ish value in [0, bound). Modulo bias is irrelevant at our scales.
  uint64_t next_below(uint64_t bound) { return bound ? next() % bound : 0; }

 private:
  uint64_t state_;
};

/// Iterated base-2 logarithm with log*(x <= 2) = 1, computed on integers via
/// ceil(log2) so the value is platform independent.
inline int64_t log_star2(uint64_t x) {
  int64_t r = 1;
  while (x > 2) {
    x = static_cast<uint64_t>(std::bit_width(x - 1));  // ceil(log2 x)
    ++r;
  }
  return r;
}

inline int64_t isqrt_floor(int64_t x) {
  if (x <= 0) return 0;
  int64_t r = static_cast<int64_t>(std::bit_ceil(static_cast<uint64_t>(x)));
  while (r * r > x) r = (r + x / r) / 2;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

inline int64_t isqrt_ceil(int64_t x) {
  int64_t r = isqrt_floor(x);
  return r * r == x ? r : r + 1;
}

inline int64_t ceil_div(int64_t a, int64_t b) { return (a + b - 1) / b; }

}  // namespace sslce
