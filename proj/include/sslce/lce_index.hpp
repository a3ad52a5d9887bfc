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
#include <optional>
#include <utility>
#include <vector>

#include "sslce/pset.hpp"
#include "sslce/suffix_core.hpp"
#include "sslce/text.hpp"

namespace sslce {

/// Equal ranks for equal blocks. Long periodic blocks are keyed by their
/// first 2*tau characters plus a length symbol, which identifies them
/// exactly (two small-period blocks agreeing on 2*tau characters and length
/// are equal). Returns ranks per block (0-based, dense) and the number of
/// distinct blocks.
std::pair<std::vector<int64_t>, int64_t> rank_blocks(const Text& text,
                                                     const PartitioningSet& pset);

struct LceStats {
  Pos lce = 0;
  int64_t comparisons = 0;  // character comparisons, the O(delta) budget
};

/// The O(n/tau)-space LCE structure: partitioning string with block ranks,
/// suffix array + LCP + RMQ over it, cumulative character depths, and the
/// sampled successor table. Queries never mutate the index.
class LceIndex {
 public:
  LceIndex() = default;
  LceIndex(Text text, PartitioningSet pset);

  /// min{k >= 0 : S[i+k] != S[j+k]}; exact for every input.
  Pos lce(Pos i, Pos j) const { return lce_stats(i, j).lce; }
  LceStats lce_stats(Pos i, Pos j) const;

  /// Character length of the longest common prefix made of whole equal
  /// blocks starting at block indices bi and bj. O(1) via RMQ.
  Pos block_lcp(int64_t bi, int64_t bj) const;

  /// Index (into block_start_positions) of the first block starting at or
  /// after alpha, or nullopt. Bounded hops from the sampled entry point.
  std::optional<int64_t> successor_block(Pos alpha) const;

  const Text& text() const { return text_; }
  const PartitioningSet& pset() const { return pset_; }
  const std::vector<Pos>& block_start_positions() const { return starts_; }
  const std::vector<int64_t>& partitioning_string() const { return sp_; }
  int64_t distinct_blocks() const { return distinct_; }
  const std::vector<int64_t>& sa() const { return sa_; }
  const std::vector<int64_t>& lcp() const { return lcp_; }
  const RmqSparseTable& rmq() const { return rmq_; }
  const std::vector<int64_t>& successor_samples() const { return succ_sample_; }

  /// Rebuild the derived tables after deserialization of the stored fields.
  static LceIndex from_parts(Text text, PartitioningSet pset, std::vector<int64_t> sp,
                             int64_t distinct, std::vector<int64_t> sa,
                             std::vector<int64_t> lcp, RmqSparseTable rmq,
                             std::vector<int64_t> succ_sample);

 private:
  void finish_derived();

  Text text_;
  PartitioningSet pset_;
  std::vector<Pos> starts_;           // block starts: positions ∪ {1}
  std::vector<Pos> cum_;              // cum_[k] = chars before block k; cum_[h] = n
  std::vector<int64_t> sp_;           // partitioning string (rank per block)
  int64_t distinct_ = 0;
  std::vector<int64_t> sa_, isa_, lcp_;
  RmqSparseTable rmq_;
  std::vector<int64_t> succ_sample_;  // A[j] = first block index with start >= j*tau
};

/// Convenience build entry (spec name).
inline LceIndex build_lce(const Text& text, const PartitioningSet& pset) {
  return LceIndex(text, pset);
}

}  // namespace sslce
