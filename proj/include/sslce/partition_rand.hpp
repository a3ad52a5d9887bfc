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
#include <vector>

#include "sslce/aux_meter.hpp"
#include "sslce/hashing.hpp"
#include "sslce/periodicity.hpp"
#include "sslce/pset.hpp"
#include "sslce/text.hpp"

namespace sslce {

/// Where the sliding-window scan runs: ranges of window start positions.
/// A window [l..l+tau-1] selects every position of minimal ID within it.
struct SelectionPlan {
  Pos tau = 0;
  std::vector<Pos> run_starts;
  std::vector<std::pair<Pos, Pos>> regions;  // inclusive window-start ranges
  std::optional<Pos> extra_pick;             // final-margin rule q'+1
};

/// Decomposes the segment cover into the scan plan: plain segments scanned in
/// place, runs contribute their start plus a scan over their last tau
/// positions when a plain segment follows, final margins per the edge rules.
SelectionPlan make_selection_plan(const SegmentList& segs, Pos tau, Pos n);

/// ID-selected positions of one plain segment: every position that attains
/// the minimum ID in some window fully inside the segment. Segments shorter
/// than tau yield no positions.
std::vector<Pos> select_plain(const Text& text, Pos seg_start, Pos seg_end, Pos tau,
                              const Fingerprinter& phi, const MinwiseHasher& h);

struct RandStats {
  int64_t step_backs = 0;
  int64_t runs_found = 0;
  AuxMeter aux;
};

/// Las-Vegas (2tau,2tau) forward-synchronized partitioning set in expected
/// linear time: runs detection, segment cover, then window-minima scans.
PartitioningSet build_rand(const Text& text, Pos tau, uint64_t seed,
                           RandStats* stats = nullptr);

struct SizeEstimate {
  double c_bar = 0.0;     // mean selected positions per sampled interval
  int64_t samples = 0;
  bool census = false;    // true when every interval was counted once
};

/// Samples m intervals [i*tau+1..(i+1)*tau] (census when m covers all of
/// them) and counts selected positions per interval with the local scanner.
SizeEstimate estimate_size_sampling(const Text& text, Pos tau, const Fingerprinter& phi,
                                    const MinwiseHasher& h, int64_t m, uint64_t sample_seed,
                                    const SegmentList* segments = nullptr);

struct WhpConfig {
  Pos base_width = 0;      // 0 = max(4, min(ceil(log2 n), tau/2))
  int64_t trials = 0;      // 0 = ceil(log2 n)
  int64_t cprime = 8;      // abandonment constant
  int64_t count_limit_override = 0;  // testing hook; 0 = cprime * n / tau
};

struct WhpResult {
  PartitioningSet pset;
  std::vector<int64_t> counts;      // per trial; counts[i] > limit means abandoned
  std::vector<int64_t> step_backs;  // per trial
  int64_t deque_capacity = 0;
  int64_t chosen = -1;              // surviving trial index, -1 if fallback
  bool fell_back = false;
};

/// High-probability variant for large tau: one coarse base set, then
/// `trials` independent min-wise functions counted with bounded deques of
/// future candidates; the first function within the size bound is
/// materialized.
WhpResult select_whp_large_tau(const Text& text, Pos tau, uint64_t seed,
                               const WhpConfig& cfg = {});

/// Count |P_h| restricted to the plan via the bounded-deque scan, abandoning
/// above `limit`. Returns (count, step_backs). Exposed for the counting
/// equivalence tests.
std::pair<int64_t, int64_t> whp_deque_count(const Text& text, const SelectionPlan& plan,
                                            const std::vector<Pos>& base_positions,
                                            const Fingerprinter& phi, const MinwiseHasher& h,
                                            int64_t deque_capacity, int64_t limit);

/// Mode dispatch used by the CLI: the sampling path below ceil(log2 n)^2,
/// the deque path at or above it.
PartitioningSet build_rand_whp(const Text& text, Pos tau, uint64_t seed,
                               RandStats* stats = nullptr, bool* fell_back = nullptr);

}  // namespace sslce
