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

#include <optional>
#include <vector>

#include "sslce/hashing.hpp"
#include "sslce/text.hpp"

namespace sslce {

/// Maximal periodic substring [start..end] with principal period `period`.
struct Run {
  Pos start = 0;
  Pos end = 0;
  Pos period = 0;

  bool operator==(const Run&) const = default;
};

struct Segment {
  Pos start = 0;
  Pos end = 0;
  Pos period = 0;  // 0 for plain segments

  bool is_run() const { return period > 0; }
  bool operator==(const Segment&) const = default;
};

/// Disjoint consecutive segments covering [1..n], alternating so that no two
/// plain segments are adjacent.
using SegmentList = std::vector<Segment>;

/// Shortest period of s (border array). Throws on the empty string.
Pos principal_period(const Text& s, Pos start, Pos end);
Pos principal_period(const std::vector<Sym>& s);

/// gcd(p,q) when len >= p+q-gcd(p,q), i.e. when Fine-Wilf applies.
std::optional<Pos> fine_wilf_reduce(Pos len, Pos p, Pos q);

/// All (tau, tau/6)-runs with principal periods, sorted by start, found via
/// the candidate-interval scan. Requires tau >= 6.
std::vector<Run> find_runs(const Text& text, Pos tau, const Fingerprinter& psi);
std::vector<Run> find_runs(const Text& text, Pos tau, uint64_t seed = 0x9e3779b9u);

/// Alternating cover of [1..n]; overlapping runs resolved right to left, a
/// later-processed run losing part of its right margin to one already stored.
SegmentList segment(const Text& text, const std::vector<Run>& runs);

}  // namespace sslce
