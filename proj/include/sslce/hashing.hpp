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
#include <vector>

#include "sslce/text.hpp"
#include "sslce/util.hpp"

namespace sslce {

using FpValue = uint64_t;
using IdValue = uint64_t;

/// 2^61 - 1. One compiled-in prime serves both the fingerprint field and the
/// min-wise polynomial field; all per-run randomness enters through the base
/// and the polynomial coefficients.
inline constexpr uint64_t kPrime61 = (uint64_t(1) << 61) - 1;

inline uint64_t add_mod(uint64_t a, uint64_t b, uint64_t p) {
  uint64_t s = a + b;
  if (s >= p) s -= p;
  return s;
}

inline uint64_t sub_mod(uint64_t a, uint64_t b, uint64_t p) {
  return a >= b ? a - b : a + p - b;
}

inline uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t p) {
  return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

/// Karp-Rabin fingerprints over GF(p) with the sliding property.
/// phi(u) = sum u[t] * base^(len-1-t) mod p, leading character most
/// significant, so equal substrings always hash equal.
class Fingerprinter {
 public:
  Fingerprinter(Pos n, uint64_t base, uint64_t prime = kPrime61)
      : p_(prime), base_(base % prime) {
    if (base_ == 0) base_ = 1;
    powers_.resize(static_cast<size_t>(n) + 2);
    powers_[0] = 1 % p_;
    for (size_t k = 1; k < powers_.size(); ++k)
      powers_[k] = mul_mod(powers_[k - 1], base_, p_);
  }

  static Fingerprinter seeded(Pos n, uint64_t seed) {
    SplitMix64 rng(seed);
    return Fingerprinter(n, 1 + rng.next_below(kPrime61 - 1));
  }

  uint64_t prime() const { return p_; }
  uint64_t base() const { return base_; }
  uint64_t power(Pos k) const { return powers_[static_cast<size_t>(k)]; }

  /// Fingerprint of S[i..i+len-1], computed from scratch in O(len).
  FpValue window(const Text& s, Pos i, Pos len) const {
    if (len < 0 || i < 1 || i + len - 1 > s.size())
      throw std::out_of_range("fp_window: window outside text");
    FpValue fp = 0;
    for (Pos k = 0; k < len; ++k)
      fp = add_mod(mul_mod(fp, base_, p_), static_cast<uint64_t>(s.sym(i + k)) % p_, p_);
    return fp;
  }

  /// Slide a length-len window one step right: drop `outgoing`, take
  /// `incoming`. O(1) given the precomputed powers.
  FpValue slide(FpValue fp_prev, Sym outgoing, Sym incoming, Pos len) const {
    FpValue without = sub_mod(fp_prev, mul_mod(static_cast<uint64_t>(outgoing) % p_, power(len - 1), p_), p_);
    return add_mod(mul_mod(without, base_, p_), static_cast<uint64_t>(incoming) % p_, p_);
  }

 private:
  uint64_t p_;
  uint64_t base_;
  std::vector<uint64_t> powers_;
};

/// Degree-(k-1) polynomial over GF(q); k-wise independence makes the family
/// approximately min-wise for the window minima selection. Evaluation is
/// Horner's rule, O(k).
class MinwiseHasher {
 public:
  MinwiseHasher(std::vector<uint64_t> coefficients, uint64_t q = kPrime61)
      : q_(q), coeff_(std::move(coefficients)) {
    if (coeff_.size() < 2) throw std::invalid_argument("minwise degree requires k >= 2");
    for (auto& c : coeff_) c %= q_;
  }

  static MinwiseHasher seeded(uint64_t seed, int k = 8) {
    SplitMix64 rng(seed);
    std::vector<uint64_t> c(static_cast<size_t>(k));
    for (auto& v : c) v = rng.next_below(kPrime61);
    return MinwiseHasher(std::move(c));
  }

  uint64_t modulus() const { return q_; }

  IdValue eval(FpValue x) const {
    uint64_t v = 0;
    uint64_t xm = x % q_;
    for (uint64_t c : coeff_) v = add_mod(mul_mod(v, xm, q_), c, q_);
    return v;
  }

 private:
  uint64_t q_;
  std::vector<uint64_t> coeff_;
};

}  // namespace sslce
