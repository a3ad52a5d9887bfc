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

#include "sslce/dcover.hpp"

#include <algorithm>
#include <stdexcept>

#include "sslce/util.hpp"

namespace sslce {

std::vector<int64_t> assign_tokens(const std::vector<Pos>& block_lengths, Pos tau_prime) {
  if (tau_prime < 1) throw std::invalid_argument("assign_tokens: tau_prime >= 1");
  std::vector<int64_t> counts(block_lengths.size());
  for (size_t i = 0; i < block_lengths.size(); ++i)
    counts[i] = i == 0 ? 1 : ceil_div(block_lengths[i - 1], tau_prime);
  return counts;
}

bool dc_token_selected(int64_t t, int64_t r, int64_t lstar_eff) {
  return t % r == 0 || t % lstar_eff < r;
}

std::vector<Pos> select_Q(const std::vector<Pos>& block_starts,
                          const std::vector<int64_t>& token_counts, int64_t lstar) {
  int64_t r = isqrt_ceil(lstar);
  int64_t leff = r * r;
  std::vector<Pos> q;
  int64_t t = 0;
  for (size_t i = 0; i < block_starts.size(); ++i) {
    bool hit = false;
    for (int64_t k = 0; k < token_counts[i]; ++k)
      if (dc_token_selected(t + k, r, leff)) {
        hit = true;
        break;
      }
    t += token_counts[i];
    if (hit) q.push_back(block_starts[i]);
  }
  return q;
}

std::vector<int64_t> small_tau_dc(int64_t t) {
  if (t < 1) throw std::invalid_argument("small_tau_dc: t >= 1");
  int64_t r = isqrt_ceil(t);
  std::vector<char> in(static_cast<size_t>(t), 0);
  for (int64_t x = 0; x < std::min(r, t); ++x) in[static_cast<size_t>(x)] = 1;
  for (int64_t x = 0; x < t; x += r) in[static_cast<size_t>(x % t)] = 1;

  // Exhaustive validation: every residue difference must be realized.
  for (int64_t d = 0; d < t; ++d) {
    bool ok = false;
    for (int64_t x = 0; x < t && !ok; ++x)
      ok = in[static_cast<size_t>(x)] && in[static_cast<size_t>((x + d) % t)];
    if (!ok) throw std::logic_error("small_tau_dc: cover check failed");
  }
  std::vector<int64_t> dc;
  for (int64_t x = 0; x < t; ++x)
    if (in[static_cast<size_t>(x)]) dc.push_back(x);
  return dc;
}

namespace {

// Does the token index range [a..b) contain a selected index?
bool range_has_selected(int64_t a, int64_t b, int64_t r, int64_t leff) {
  if (a >= b) return false;
  int64_t m = ceil_div(a, r) * r;
  if (m < b) return true;
  int64_t rem = a % leff;
  if (rem < r) return true;
  return a - rem + leff < b;
}

}  // namespace

DcIndex build_dc(const Text& text, Pos tau, const DcConfig& cfg) {
  Pos n = text.size();
  if (tau < 1 || tau > n) throw std::invalid_argument("build_dc: tau must be in [1..n]");

  DcIndex idx;
  idx.text_ = text;
  DcParams& pr = idx.params_;
  pr.tau = tau;
  pr.lstar = cfg.force_lstar > 0
                 ? cfg.force_lstar
                 : log_star2(static_cast<uint64_t>(std::max<Pos>(n, 2)));
  pr.r = isqrt_ceil(pr.lstar);
  pr.lstar_eff = pr.r * pr.r;

  if (tau < pr.r) {
    // Very small tau: positions by residue from a difference cover mod tau^2.
    pr.small_tau = true;
    pr.dc_modulus = tau * tau;
    pr.tau_prime = 1;
    pr.delta = pr.dc_modulus;
    idx.dc_ = small_tau_dc(pr.dc_modulus);
    std::vector<char> mask(static_cast<size_t>(pr.dc_modulus), 0);
    for (int64_t x : idx.dc_) mask[static_cast<size_t>(x)] = 1;
    for (Pos i = 1; i <= n; ++i)
      if (mask[static_cast<size_t>(i % pr.dc_modulus)]) idx.q_.push_back(i);
  } else {
    pr.small_tau = false;
    pr.tau_prime = std::max<Pos>(1, tau / pr.r);
    int64_t ls = log_star2(static_cast<uint64_t>(std::max<Pos>(n, 2)));
    pr.delta = std::max<Pos>(pr.tau_prime, ceil_div(cfg.det.c_logstar * pr.tau_prime * ls, 2));

    // Two streaming passes over the fine set: the first counts tokens, the
    // second knows each block's global token range (blocks arrive right to
    // left, so ranges are prefix totals minus suffix totals) and keeps only
    // positions owning a selected token.
    int64_t total_tokens = 0;
    {
      // Every block's length feeds its right neighbor's token count, so the
      // rightmost (first emitted) length contributes nothing.
      bool first = true;
      bool any = false;
      stream_det_blocks(text, pr.tau_prime, cfg.det, [&](DetBlock b) {
        any = true;
        if (first)
          first = false;
        else
          total_tokens += ceil_div(b.end - b.start + 1, pr.tau_prime);
      });
      if (any) total_tokens += 1;  // leftmost block owns one token
    }
    {
      int64_t suffix_tokens = 0;  // tokens owned by blocks right of the pending one
      Pos pend_start = -1, pend_len = -1;
      auto flush_pending = [&](int64_t count) {
        int64_t hi = total_tokens - suffix_tokens;
        if (range_has_selected(hi - count, hi, pr.r, pr.lstar_eff))
          idx.q_.push_back(pend_start);
        suffix_tokens += count;
      };
      stream_det_blocks(text, pr.tau_prime, cfg.det, [&](DetBlock b) {
        if (pend_start >= 0) flush_pending(ceil_div(b.end - b.start + 1, pr.tau_prime));
        pend_start = b.start;
        pend_len = b.end - b.start + 1;
      });
      (void)pend_len;
      if (pend_start >= 0) flush_pending(1);
      std::reverse(idx.q_.begin(), idx.q_.end());
    }
  }

  // Sparse suffix structure of Q, built over its own coarse partitioning.
  if (!idx.q_.empty()) {
    Pos tau2 = std::clamp<Pos>(n / std::max<int64_t>(1, static_cast<int64_t>(idx.q_.size())),
                               1, n);
    PartitioningSet p2 = build_det(text, tau2, cfg.det);
    auto p2ssa = ssa_of_pset(text, p2);
    std::vector<Pos> ssa_q = ssa_of_B(text, idx.q_, p2, p2ssa);
    LceIndex lce2 = build_lce(text, p2);
    std::vector<Pos> lcp_q;
    for (size_t k = 0; k + 1 < ssa_q.size(); ++k)
      lcp_q.push_back(lce2.lce(ssa_q[k], ssa_q[k + 1]));
    idx.ssa_ = std::move(ssa_q);
    idx.lcp_ = std::move(lcp_q);
    idx.rmq_ = RmqSparseTable(std::vector<int64_t>(idx.lcp_.begin(), idx.lcp_.end()));
  }
  idx.finish_derived();
  return idx;
}

void DcIndex::finish_derived() {
  Pos n = text_.size();
  // rank per q position (by position order)
  rank_of_q_.assign(q_.size(), 0);
  {
    std::vector<std::pair<Pos, int64_t>> tmp(ssa_.size());
    for (size_t k = 0; k < ssa_.size(); ++k) tmp[k] = {ssa_[k], static_cast<int64_t>(k)};
    std::sort(tmp.begin(), tmp.end());
    for (size_t k = 0; k < tmp.size(); ++k) rank_of_q_[k] = tmp[k].second;
  }
  Pos step = std::max<Pos>(params_.tau, 1);
  int64_t h = static_cast<int64_t>(q_.size());
  succ_sample_.assign(static_cast<size_t>(n / step) + 1, h);
  int64_t b = 0;
  for (size_t j = 0; j < succ_sample_.size(); ++j) {
    Pos target = static_cast<Pos>(j) * step;
    while (b < h && q_[static_cast<size_t>(b)] < target) ++b;
    succ_sample_[j] = b;
  }
  if (params_.small_tau) {
    dc_mask_.assign(static_cast<size_t>(params_.dc_modulus), 0);
    for (int64_t x : dc_) dc_mask_[static_cast<size_t>(x)] = 1;
  }
  sst_ = build_sst_arrays(n, ssa_, lcp_);
}

DcIndex DcIndex::from_parts(Text text, DcParams params, std::vector<Pos> q,
                            std::vector<Pos> ssa, std::vector<Pos> lcp, RmqSparseTable rmq,
                            std::vector<int64_t> dc, std::vector<int64_t> succ_sample) {
  DcIndex idx;
  idx.text_ = std::move(text);
  idx.params_ = params;
  idx.q_ = std::move(q);
  idx.ssa_ = std::move(ssa);
  idx.lcp_ = std::move(lcp);
  idx.rmq_ = std::move(rmq);
  idx.dc_ = std::move(dc);
  idx.finish_derived();
  idx.succ_sample_ = std::move(succ_sample);
  return idx;
}

bool DcIndex::in_q(Pos p) const {
  if (params_.small_tau)
    return p >= 1 && p <= text_.size() && dc_mask_[static_cast<size_t>(p % params_.dc_modulus)];
  return std::binary_search(q_.begin(), q_.end(), p);
}

int64_t DcIndex::sst_lce(Pos x, Pos y) const {
  Pos n = text_.size();
  if (x == y) return n - x + 1;
  auto rank = [&](Pos p) {
    auto it = std::lower_bound(q_.begin(), q_.end(), p);
    return rank_of_q_[static_cast<size_t>(it - q_.begin())];
  };
  int64_t r1 = rank(x), r2 = rank(y);
  if (r1 > r2) std::swap(r1, r2);
  return rmq_.min_value(r1, r2 - 1);
}

LceStats DcIndex::lce_stats(Pos i, Pos j) const {
  Pos n = text_.size();
  if (i < 1 || j < 1 || i > n || j > n) throw std::out_of_range("lce_dc: position outside text");
  LceStats st;
  if (i == j) {
    st.lce = n - i + 1;
    return st;
  }
  auto eq = [&](Pos a, Pos b) {
    ++st.comparisons;
    return text_.sym(a) == text_.sym(b);
  };

  if (params_.small_tau) {
    for (Pos k = 0;; ++k) {
      if (!eq(i + k, j + k)) {
        st.lce = k;
        return st;
      }
      if (in_q(i + k) && in_q(j + k)) {
        st.lce = k + sst_lce(i + k, j + k);
        return st;
      }
    }
  }

  // Joint-membership scan with walking iterators over Q.
  const Pos delta = params_.delta;
  auto it_i = std::lower_bound(q_.begin(), q_.end(), i);
  auto it_j = std::lower_bound(q_.begin(), q_.end(), j);
  for (Pos k = 0; k < 4 * delta; ++k) {
    if (!eq(i + k, j + k)) {
      st.lce = k;
      return st;
    }
    while (it_i != q_.end() && *it_i < i + k) ++it_i;
    while (it_j != q_.end() && *it_j < j + k) ++it_j;
    bool qi = it_i != q_.end() && *it_i == i + k;
    bool qj = it_j != q_.end() && *it_j == j + k;
    if (qi && qj) {
      st.lce = k + sst_lce(i + k, j + k);
      return st;
    }
  }

  // No joint hit within 4*delta: the gap is a long-period region. Jump to
  // the earlier successor past offset 2*delta and finish from there.
  auto suc = [&](Pos alpha) -> std::optional<Pos> {
    if (q_.empty()) return std::nullopt;
    Pos step = std::max<Pos>(params_.tau, 1);
    size_t jj = std::min(static_cast<size_t>(std::max<Pos>(alpha, 0) / step),
                         succ_sample_.size() - 1);
    int64_t b = succ_sample_[jj];
    int64_t h = static_cast<int64_t>(q_.size());
    while (b < h && q_[static_cast<size_t>(b)] < alpha) ++b;
    if (b >= h) return std::nullopt;
    return q_[static_cast<size_t>(b)];
  };
  auto tail_scan = [&](Pos from) {
    Pos k = from;
    while (eq(i + k, j + k)) ++k;
    st.lce = k;
    return st;
  };

  auto si = suc(i + 2 * delta), sj = suc(j + 2 * delta);
  if (!si && !sj) {
    st.lce = n + 1 - std::max(i, j);
    return st;
  }
  if (!si || !sj) return tail_scan(si ? *si - i : *sj - j);
  Pos alpha_i = *si - i, alpha_j = *sj - j;
  if (alpha_i == alpha_j) {
    st.lce = alpha_i + sst_lce(i + alpha_i, j + alpha_j);
    return st;
  }
  return tail_scan(std::min(alpha_i, alpha_j));
}

}  // namespace sslce
