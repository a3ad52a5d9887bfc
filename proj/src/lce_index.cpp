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

#include "sslce/lce_index.hpp"

#include <algorithm>
#include <stdexcept>

namespace sslce {

namespace {

constexpr uint64_t kLengthBand = 512;  // above every character symbol

}  // namespace

std::pair<std::vector<int64_t>, int64_t> rank_blocks(const Text& text,
                                                     const PartitioningSet& pset) {
  auto starts = block_starts(pset);
  Pos n = text.size();
  int64_t h = static_cast<int64_t>(starts.size());

  auto block_end = [&](int64_t b) {
    return (b + 1 < h ? starts[static_cast<size_t>(b + 1)] : n + 1) - 1;
  };
  auto key_len = [&](int64_t b) -> int64_t {
    Pos len = block_end(b) - starts[static_cast<size_t>(b)] + 1;
    if (len > pset.tau) return std::min<Pos>(len, 2 * pset.tau) + 1;  // prefix + length symbol
    return len;
  };
  auto key_sym = [&](int64_t b, int64_t d) -> uint64_t {
    Pos s = starts[static_cast<size_t>(b)];
    Pos len = block_end(b) - s + 1;
    if (len > pset.tau) {
      Pos prefix = std::min<Pos>(len, 2 * pset.tau);
      if (d == prefix) return kLengthBand + static_cast<uint64_t>(len);
      return static_cast<uint64_t>(text.sym(s + d));
    }
    return static_cast<uint64_t>(text.sym(s + d));
  };

  std::vector<int64_t> ranks = sort_strings(h, key_len, key_sym);
  int64_t distinct = h == 0 ? 0 : 1 + *std::max_element(ranks.begin(), ranks.end());
  return {std::move(ranks), distinct};
}

LceIndex::LceIndex(Text text, PartitioningSet pset)
    : text_(std::move(text)), pset_(std::move(pset)) {
  starts_ = block_starts(pset_);
  auto [ranks, distinct] = rank_blocks(text_, pset_);
  sp_ = std::move(ranks);
  distinct_ = distinct;
  sa_ = suffix_array(sp_);
  lcp_ = lcp_kasai(sp_, sa_);
  rmq_ = RmqSparseTable(lcp_);

  Pos n = text_.size();
  Pos tau = std::max<Pos>(pset_.tau, 1);
  int64_t h = static_cast<int64_t>(starts_.size());
  succ_sample_.assign(static_cast<size_t>(n / tau) + 1, h);
  int64_t b = 0;
  for (size_t j = 0; j < succ_sample_.size(); ++j) {
    Pos target = static_cast<Pos>(j) * tau;
    while (b < h && starts_[static_cast<size_t>(b)] < target) ++b;
    succ_sample_[j] = b;
  }
  finish_derived();
}

void LceIndex::finish_derived() {
  Pos n = text_.size();
  int64_t h = static_cast<int64_t>(starts_.size());
  cum_.assign(static_cast<size_t>(h) + 1, 0);
  for (int64_t k = 0; k < h; ++k) {
    Pos end = (k + 1 < h ? starts_[static_cast<size_t>(k + 1)] : n + 1) - 1;
    cum_[static_cast<size_t>(k + 1)] =
        cum_[static_cast<size_t>(k)] + (end - starts_[static_cast<size_t>(k)] + 1);
  }
  isa_.assign(static_cast<size_t>(h), 0);
  for (int64_t r = 0; r < h; ++r) isa_[static_cast<size_t>(sa_[static_cast<size_t>(r)])] = r;
}

LceIndex LceIndex::from_parts(Text text, PartitioningSet pset, std::vector<int64_t> sp,
                              int64_t distinct, std::vector<int64_t> sa,
                              std::vector<int64_t> lcp, RmqSparseTable rmq,
                              std::vector<int64_t> succ_sample) {
  LceIndex idx;
  idx.text_ = std::move(text);
  idx.pset_ = std::move(pset);
  idx.starts_ = block_starts(idx.pset_);
  idx.sp_ = std::move(sp);
  idx.distinct_ = distinct;
  idx.sa_ = std::move(sa);
  idx.lcp_ = std::move(lcp);
  idx.rmq_ = std::move(rmq);
  idx.succ_sample_ = std::move(succ_sample);
  idx.finish_derived();
  return idx;
}

std::optional<int64_t> LceIndex::successor_block(Pos alpha) const {
  int64_t h = static_cast<int64_t>(starts_.size());
  if (alpha <= 1) return h > 0 ? std::optional<int64_t>(0) : std::nullopt;
  Pos tau = std::max<Pos>(pset_.tau, 1);
  size_t j = std::min(static_cast<size_t>(alpha / tau), succ_sample_.size() - 1);
  int64_t b = succ_sample_[j];
  while (b < h && starts_[static_cast<size_t>(b)] < alpha) ++b;  // bounded list hops
  if (b >= h) return std::nullopt;
  return b;
}

Pos LceIndex::block_lcp(int64_t bi, int64_t bj) const {
  int64_t h = static_cast<int64_t>(starts_.size());
  if (bi < 0 || bj < 0 || bi >= h || bj >= h) throw std::out_of_range("block_lcp: bad block");
  if (bi == bj) return cum_[static_cast<size_t>(h)] - cum_[static_cast<size_t>(bi)];
  int64_t r1 = isa_[static_cast<size_t>(bi)], r2 = isa_[static_cast<size_t>(bj)];
  if (r1 > r2) std::swap(r1, r2);
  int64_t blocks = rmq_.min_value(r1, r2 - 1);
  return cum_[static_cast<size_t>(bi + blocks)] - cum_[static_cast<size_t>(bi)];
}

LceStats LceIndex::lce_stats(Pos i, Pos j) const {
  Pos n = text_.size();
  if (i < 1 || j < 1 || i > n || j > n) throw std::out_of_range("lce: position outside text");
  LceStats st;
  if (i == j) {
    st.lce = n - i + 1;
    return st;
  }
  const Pos delta = pset_.delta;
  const Pos tauf = pset_.tau;
  auto eq = [&](Pos a, Pos b) {
    ++st.comparisons;
    return text_.sym(a) == text_.sym(b);
  };
  auto tail_scan = [&](Pos from) {  // first mismatch at or after offset `from`
    Pos k = from;
    while (eq(i + k, j + k)) ++k;
    st.lce = k;
    return st;
  };

  // Phase 1: up to 3*delta direct comparisons.
  for (Pos k = 0; k < 3 * delta; ++k) {
    if (!eq(i + k, j + k)) {
      st.lce = k;
      return st;
    }
  }

  auto si = successor_block(i + delta);
  auto sj = successor_block(j + delta);
  if (!si && !sj) {
    // Both tails live inside the trailing periodic block; the 3*delta of
    // agreement pins the alignment to the text end.
    st.lce = n + 1 - std::max(i, j);
    return st;
  }
  if (!si || !sj) {
    Pos alpha = si ? starts_[static_cast<size_t>(*si)] - i : starts_[static_cast<size_t>(*sj)] - j;
    return tail_scan(alpha);
  }
  Pos alpha_i = starts_[static_cast<size_t>(*si)] - i;
  Pos alpha_j = starts_[static_cast<size_t>(*sj)] - j;
  if (alpha_i != alpha_j) return tail_scan(std::min(alpha_i, alpha_j));

  // Phase 2/3 loop: jump over the common full-block middle, then compare the
  // tail; aligned long periodic blocks re-synchronize at their endpoints.
  int64_t h = static_cast<int64_t>(starts_.size());
  int64_t bi = *si, bj = *sj;
  Pos k = alpha_i;
  while (true) {
    Pos jump = block_lcp(bi, bj);
    k += jump;
    for (Pos m = 0; m < delta + tauf; ++m) {
      if (!eq(i + k + m, j + k + m)) {
        st.lce = k + m;
        return st;
      }
    }
    // Both offsets sit inside long periodic blocks with matching content;
    // skip to the earlier block end.
    auto bsucc_i = successor_block(i + k + 1);
    auto bsucc_j = successor_block(j + k + 1);
    if (!bsucc_i && !bsucc_j) {
      st.lce = n + 1 - std::max(i, j);
      return st;
    }
    if (!bsucc_i || !bsucc_j) {
      Pos beta = bsucc_i ? starts_[static_cast<size_t>(*bsucc_i)] - i
                         : starts_[static_cast<size_t>(*bsucc_j)] - j;
      return tail_scan(beta);
    }
    Pos beta_i = starts_[static_cast<size_t>(*bsucc_i)] - i;
    Pos beta_j = starts_[static_cast<size_t>(*bsucc_j)] - j;
    if (beta_i != beta_j) return tail_scan(std::min(beta_i, beta_j));
    // Aligned again (cannot normally happen: equal blocks would have been
    // part of the jump). Continue from the next block pair.
    k = beta_i;
    bi = *bsucc_i;
    bj = *bsucc_j;
    if (bi >= h || bj >= h) return tail_scan(k);
  }
}

}  // namespace sslce
