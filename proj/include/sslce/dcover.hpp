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
#include <vector>

#include "sslce/lce_index.hpp"
#include "sslce/partition_det.hpp"
#include "sslce/sparse_suffix.hpp"
#include "sslce/text.hpp"

namespace sslce {

/// Per-block token counts: block 0 gets one token, block i >= 1 gets
/// ceil(lengths[i-1] / tau_prime) tokens (the count depends on the
/// preceding block's length).
std::vector<int64_t> assign_tokens(const std::vector<Pos>& block_lengths, Pos tau_prime);

/// Token index selection: t enters the cover when t mod r == 0 or
/// t mod lstar_eff < r, where r = ceil(sqrt(lstar)) and lstar_eff = r^2.
bool dc_token_selected(int64_t t, int64_t r, int64_t lstar_eff);

/// Positions owning at least one selected token, given per-block counts.
std::vector<Pos> select_Q(const std::vector<Pos>& block_starts,
                          const std::vector<int64_t>& token_counts, int64_t lstar);

/// Difference cover modulo t of size O(sqrt(t)): residues {0..r-1} plus the
/// multiples of r, validated exhaustively before returning.
std::vector<int64_t> small_tau_dc(int64_t t);

struct DcConfig {
  DetConfig det;
  int64_t force_lstar = 0;  // testing hook; 0 = log* n
};

struct DcParams {
  Pos tau = 0;
  Pos tau_prime = 0;
  int64_t lstar = 0;      // log* n (or the forced value)
  int64_t r = 0;          // ceil(sqrt(lstar))
  int64_t lstar_eff = 0;  // r^2
  Pos delta = 0;          // fine-set locality radius
  bool small_tau = false;
  int64_t dc_modulus = 0;  // tau^2 on the small path
};

/// Deterministic LCE with O(n/tau) positions and an O(tau sqrt(log* n))
/// comparison budget: difference-cover subsampling of the fine deterministic
/// set, with the sparse suffix structure of Q answering the remainder of a
/// query in constant time after a joint hit.
class DcIndex {
 public:
  DcIndex() = default;

  Pos lce(Pos i, Pos j) const { return lce_stats(i, j).lce; }
  LceStats lce_stats(Pos i, Pos j) const;

  bool in_q(Pos p) const;

  const Text& text() const { return text_; }
  const DcParams& params() const { return params_; }
  const std::vector<Pos>& q_set() const { return q_; }
  const std::vector<Pos>& ssa() const { return ssa_; }
  const std::vector<Pos>& lcp() const { return lcp_; }
  const RmqSparseTable& rmq() const { return rmq_; }
  const std::vector<int64_t>& dc_residues() const { return dc_; }
  const std::vector<int64_t>& successor_samples() const { return succ_sample_; }
  const SparseSuffixIndex& sst() const { return sst_; }

  static DcIndex from_parts(Text text, DcParams params, std::vector<Pos> q,
                            std::vector<Pos> ssa, std::vector<Pos> lcp, RmqSparseTable rmq,
                            std::vector<int64_t> dc, std::vector<int64_t> succ_sample);

  friend DcIndex build_dc(const Text& text, Pos tau, const DcConfig& cfg);

 private:
  void finish_derived();
  int64_t sst_lce(Pos x, Pos y) const;  // both in Q

  Text text_;
  DcParams params_;
  std::vector<Pos> q_;
  std::vector<Pos> ssa_, lcp_;
  RmqSparseTable rmq_;
  std::vector<int64_t> rank_of_q_;     // derived: suffix rank per q_ entry
  std::vector<int64_t> succ_sample_;   // A[j] = first q index with position >= j*tau
  std::vector<int64_t> dc_;            // small path residues
  std::vector<char> dc_mask_;          // derived
  SparseSuffixIndex sst_;              // topology (rebuilt from ssa/lcp)
};

DcIndex build_dc(const Text& text, Pos tau, const DcConfig& cfg = {});

}  // namespace sslce
