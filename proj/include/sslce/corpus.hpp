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

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "sslce/text.hpp"
#include "sslce/util.hpp"

namespace sslce {

inline Text gen_random(Pos n, int sigma, uint64_t seed) {
  if (sigma < 1 || sigma > 256) throw std::invalid_argument("sigma in [1,256]");
  SplitMix64 rng(seed);
  std::vector<uint8_t> b(static_cast<size_t>(n));
  for (auto& c : b) c = static_cast<uint8_t>(rng.next_below(static_cast<uint64_t>(sigma)));
  return Text(std::move(b));
}

/// abc...abc... with period sigma (period 2 when sigma == 1 would be unary,
/// so sigma 1 yields the constant text).
inline Text gen_periodic(Pos n, int sigma, uint64_t /*seed*/ = 0) {
  if (sigma < 1 || sigma > 256) throw std::invalid_argument("sigma in [1,256]");
  std::vector<uint8_t> b(static_cast<size_t>(n));
  for (Pos i = 0; i < n; ++i) b[static_cast<size_t>(i)] = static_cast<uint8_t>(i % sigma);
  return Text(std::move(b));
}

inline Text gen_fibonacci(Pos n) {
  std::string a = "a", b = "b";
  while (static_cast<Pos>(a.size()) < n) {
    std::string c = a + b;
    b = std::move(a);
    a = std::move(c);
  }
  a.resize(static_cast<size_t>(n));
  return Text(a);
}

inline Text gen_thue_morse(Pos n) {
  std::vector<uint8_t> b(static_cast<size_t>(n));
  for (Pos i = 0; i < n; ++i)
    b[static_cast<size_t>(i)] = static_cast<uint8_t>(__builtin_popcountll(static_cast<uint64_t>(i)) & 1) + 'a';
  return Text(std::move(b));
}

inline Text gen_corpus(const std::string& kind, Pos n, int sigma, uint64_t seed) {
  if (kind == "random") return gen_random(n, sigma, seed);
  if (kind == "periodic") return gen_periodic(n, sigma, seed);
  if (kind == "fibonacci") return gen_fibonacci(n);
  if (kind == "thue-morse") return gen_thue_morse(n);
  throw std::invalid_argument("unknown corpus kind: " + kind);
}

}  // namespace sslce
