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

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sslce/periodicity.hpp"
#include "sslce/text.hpp"

namespace sslce {

/// A (tau, delta)-partitioning set. `positions` is strictly increasing within
/// [1..n]. Every block (interval between consecutive members of
/// positions ∪ {1, n+1}) is either at most tau long or periodic with a
/// character-verified period recorded in block_periods.
struct PartitioningSet {
  std::vector<Pos> positions;
  Pos tau = 0;
  Pos delta = 0;
  std::vector<std::pair<Pos, Pos>> block_periods;  // (block start, rho), sorted
  bool forward_sync = false;

  Pos period_of_block(Pos block_start) const {
    auto it = std::lower_bound(block_periods.begin(), block_periods.end(),
                               std::make_pair(block_start, Pos(0)));
    if (it != block_periods.end() && it->first == block_start) return it->second;
    return 0;
  }
};

/// Block start positions: positions ∪ {1}, sorted, deduplicated.
inline std::vector<Pos> block_starts(const PartitioningSet& pset) {
  std::vector<Pos> starts;
  starts.reserve(pset.positions.size() + 1);
  if (pset.positions.empty() || pset.positions.front() != 1) starts.push_back(1);
  starts.insert(starts.end(), pset.positions.begin(), pset.positions.end());
  return starts;
}

/// Recomputes block_periods from scratch: every block longer than tau gets
/// its principal period, verified by character scan. Throws if some long
/// block has period above tau (a Def.1 violation).
inline void fill_block_periods(const Text& text, PartitioningSet& pset) {
  pset.block_periods.clear();
  auto starts = block_starts(pset);
  Pos n = text.size();
  for (size_t i = 0; i < starts.size(); ++i) {
    Pos s = starts[i];
    Pos e = (i + 1 < starts.size() ? starts[i + 1] : n + 1) - 1;
    if (e - s + 1 > pset.tau) {
      Pos rho = principal_period(text, s, e);
      if (rho > pset.tau)
        throw std::logic_error("partitioning set: long block without small period");
      pset.block_periods.emplace_back(s, rho);
    }
  }
}

}  // namespace sslce
