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

#include <string>
#include <vector>

#include "sslce/periodicity.hpp"
#include "sslce/pset.hpp"
#include "sslce/text.hpp"

// Brute-force references used by tests and the verify command. Deliberately
// simple and slow; none of this shares code with the production paths.

namespace sslce::oracle {

/// min{k >= 0 : S[i+k] != S[j+k]}, sentinel-aware. lce(i,i) = n-i+1.
Pos naive_lce(const Text& text, Pos i, Pos j);

/// Full-comparison suffix sort of B (1-based positions).
std::vector<Pos> naive_ssa(const Text& text, std::vector<Pos> b);

/// All (tau, tau/6)-runs by direct periodic-stretch scanning.
std::vector<Run> naive_runs(const Text& text, Pos tau);

struct PsetReport {
  bool ok = true;
  int64_t context_pairs_checked = 0;
  int64_t fs_pairs_checked = 0;
  int64_t blocks = 0;
  double size_ratio = 0.0;  // |P| * tau / n
  std::string first_violation;

  void fail(std::string msg) {
    if (ok) first_violation = std::move(msg);
    ok = false;
  }
};

/// Verifies Def.1 local consistency (via context grouping plus exact
/// confirmation), compactness (character-scan periods), and Def.2 forward
/// synchronization, and reports the size ratio.
PsetReport check_pset(const Text& text, const PartitioningSet& pset);

/// Suffix ranks by prefix doubling, for reuse across several check_pset calls
/// on the same text.
std::vector<int64_t> suffix_rank_oracle(const Text& text);
PsetReport check_pset(const Text& text, const PartitioningSet& pset,
                      const std::vector<int64_t>* suffix_ranks);

}  // namespace sslce::oracle
