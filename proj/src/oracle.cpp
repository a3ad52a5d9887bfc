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

#include "sslce/oracle.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <unordered_map>

namespace sslce::oracle {

Pos naive_lce(const Text& text, Pos i, Pos j) {
  Pos n = text.size();
  if (i < 1 || j < 1 || i > n || j > n) throw std::out_of_range("naive_lce: position outside text");
  if (i == j) return n - i + 1;
  Pos k = 0;
  while (text.sym(i + k) == text.sym(j + k)) ++k;  // sentinels force a mismatch
  return k;
}

std::vector<Pos> naive_ssa(const Text& text, std::vector<Pos> b) {
  std::sort(b.begin(), b.end(), [&](Pos x, Pos y) {
    if (x == y) return false;
    Pos k = 0;
    while (true) {
      Sym cx = text.sym(x + k), cy = text.sym(y + k);
      if (cx != cy) return cx < cy;  // sentinel 0 sorts the shorter suffix first
      ++k;
    }
  });
  return b;
}

std::vector<Run> naive_runs(const Text& text, Pos tau) {
  std::vector<Run> out;
  Pos n = text.size();
  Pos max_rho = tau / 6;
  for (Pos rho = 1; rho <= max_rho; ++rho) {
    Pos x = 1;
    while (x + rho <= n) {
      if (text.sym(x) != text.sym(x + rho)) {
        ++x;
        continue;
      }
      Pos a = x;
      while (x + rho <= n && text.sym(x) == text.sym(x + rho)) ++x;
      Pos b = x - 1;
      Pos start = a, end = b + rho;
      if (end - start + 1 >= tau && principal_period(text, start, end) == rho)
        out.push_back({start, end, rho});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Run& u, const Run& v) { return u.start < v.start; });
  return out;
}

std::vector<int64_t> suffix_rank_oracle(const Text& text) {
  // Prefix doubling with std::sort; independent of the production SA-IS path.
  int64_t n = text.size();
  std::vector<int64_t> sa(static_cast<size_t>(n)), rank(static_cast<size_t>(n)),
      next(static_cast<size_t>(n));
  std::iota(sa.begin(), sa.end(), 0);
  for (int64_t i = 0; i < n; ++i) rank[static_cast<size_t>(i)] = text.sym(i + 1);
  for (int64_t k = 1;; k <<= 1) {
    auto key = [&](int64_t i) {
      return std::make_pair(rank[static_cast<size_t>(i)],
                            i + k < n ? rank[static_cast<size_t>(i + k)] : int64_t(-1));
    };
    std::sort(sa.begin(), sa.end(), [&](int64_t a, int64_t b) { return key(a) < key(b); });
    next[static_cast<size_t>(sa[0])] = 0;
    for (int64_t i = 1; i < n; ++i)
      next[static_cast<size_t>(sa[static_cast<size_t>(i)])] =
          next[static_cast<size_t>(sa[static_cast<size_t>(i - 1)])] +
          (key(sa[static_cast<size_t>(i - 1)]) < key(sa[static_cast<size_t>(i)]) ? 1 : 0);
    rank.swap(next);
    if (rank[static_cast<size_t>(sa[static_cast<size_t>(n - 1)])] == n - 1) break;
  }
  return rank;
}

namespace {

bool member(const std::vector<Pos>& sorted, Pos x) {
  return std::binary_search(sorted.begin(), sorted.end(), x);
}

void check_local_consistency(const Text& text, const PartitioningSet& pset, PsetReport& rep) {
  Pos n = text.size();
  Pos delta = pset.delta;
  if (n < 2 * delta + 1) return;  // no positions with full contexts

  // Group candidate positions by a rolling hash of S[i-delta..i+delta], then
  // confirm with exact comparison before requiring equal membership.
  const uint64_t mult = 0x100000001b3ull;
  Pos len = 2 * delta + 1;
  uint64_t top = 1;
  for (Pos k = 1; k < len; ++k) top *= mult;
  std::unordered_map<uint64_t, std::vector<Pos>> buckets;
  uint64_t h = 0;
  for (Pos x = 1; x <= len; ++x) h = h * mult + static_cast<uint64_t>(text.sym(x));
  for (Pos i = 1 + delta; i <= n - delta; ++i) {
    if (i > 1 + delta)
      h = (h - static_cast<uint64_t>(text.sym(i - delta - 1)) * top) * mult +
          static_cast<uint64_t>(text.sym(i + delta));
    buckets[h].push_back(i);
  }

  auto contexts_equal = [&](Pos i, Pos j) {
    return text.range_equal(i - delta, j - delta, len);
  };
  for (auto& [hash, group] : buckets) {
    (void)hash;
    std::vector<Pos> rest = std::move(group);
    while (rest.size() > 1) {
      Pos head = rest.front();
      bool head_in = member(pset.positions, head);
      std::vector<Pos> leftover;
      for (size_t k = 1; k < rest.size(); ++k) {
        Pos j = rest[k];
        if (!contexts_equal(head, j)) {
          leftover.push_back(j);
          continue;
        }
        ++rep.context_pairs_checked;
        if (member(pset.positions, j) != head_in) {
          char buf[160];
          std::snprintf(buf, sizeof buf,
                        "local consistency: equal contexts at %lld and %lld but "
                        "membership differs",
                        static_cast<long long>(head), static_cast<long long>(j));
          rep.fail(buf);
          return;
        }
      }
      rest = std::move(leftover);
    }
  }
}

void check_compactness(const Text& text, const PartitioningSet& pset, PsetReport& rep) {
  auto starts = block_starts(pset);
  Pos n = text.size();
  rep.blocks = static_cast<int64_t>(starts.size());
  for (size_t i = 0; i < starts.size(); ++i) {
    Pos s = starts[i];
    Pos e = (i + 1 < starts.size() ? starts[i + 1] : n + 1) - 1;
    Pos len = e - s + 1;
    Pos recorded = pset.period_of_block(s);
    if (len <= pset.tau) {
      if (recorded != 0) rep.fail("compactness: short block carries a recorded period");
      continue;
    }
    if (recorded == 0 || recorded > pset.tau) {
      char buf[120];
      std::snprintf(buf, sizeof buf, "compactness: block [%lld..%lld] gap %lld > tau %lld unexplained",
                    static_cast<long long>(s), static_cast<long long>(e),
                    static_cast<long long>(len), static_cast<long long>(pset.tau));
      rep.fail(buf);
      continue;
    }
    // Character-scan verification of the recorded period.
    for (Pos x = s + recorded; x <= e; ++x) {
      if (text.sym(x) != text.sym(x - recorded)) {
        rep.fail("compactness: recorded period fails character verification");
        break;
      }
    }
  }
}

void check_forward_sync(const Text& text, const PartitioningSet& pset,
                        const std::vector<int64_t>* ranks, PsetReport& rep) {
  const auto& p = pset.positions;
  if (p.size() < 2) return;
  Pos n = text.size();

  std::vector<Pos> order(p.begin(), p.end() - 1);  // last member has no successor gap
  std::vector<int64_t> local_ranks;
  const std::vector<int64_t>* r = ranks;
  if (!r) {
    local_ranks = suffix_rank_oracle(text);
    r = &local_ranks;
  }
  std::sort(order.begin(), order.end(), [&](Pos a, Pos b) {
    return (*r)[static_cast<size_t>(a - 1)] < (*r)[static_cast<size_t>(b - 1)];
  });

  auto gap_of = [&](Pos x) {
    auto it = std::upper_bound(p.begin(), p.end(), x);
    return (it == p.end() ? n + 1 : *it) - x;
  };

  // Checking suffix-order-adjacent pairs suffices: LCE of any pair is the
  // minimum over the adjacent chain, so equal gaps propagate.
  for (size_t k = 0; k + 1 < order.size(); ++k) {
    Pos x = order[k], y = order[k + 1];
    Pos gx = gap_of(x), gy = gap_of(y);
    Pos bound = std::min(gx, gy) + pset.delta;
    Pos l = 0;
    while (l <= bound && text.sym(x + l) == text.sym(y + l)) ++l;
    ++rep.fs_pairs_checked;
    if (l > bound && gx != gy) {
      char buf[160];
      std::snprintf(buf, sizeof buf,
                    "forward sync: positions %lld and %lld share a long prefix but "
                    "successor gaps differ (%lld vs %lld)",
                    static_cast<long long>(x), static_cast<long long>(y),
                    static_cast<long long>(gx), static_cast<long long>(gy));
      rep.fail(buf);
      return;
    }
  }
}

}  // namespace

PsetReport check_pset(const Text& text, const PartitioningSet& pset,
                      const std::vector<int64_t>* suffix_ranks) {
  PsetReport rep;
  Pos n = text.size();
  if (!std::is_sorted(pset.positions.begin(), pset.positions.end()) ||
      std::adjacent_find(pset.positions.begin(), pset.positions.end()) != pset.positions.end())
    rep.fail("positions not strictly increasing");
  if (!pset.positions.empty() && (pset.positions.front() < 1 || pset.positions.back() > n))
    rep.fail("positions outside [1..n]");
  if (rep.ok) {
    check_compactness(text, pset, rep);
    if (rep.ok) check_local_consistency(text, pset, rep);
    if (rep.ok && pset.forward_sync) check_forward_sync(text, pset, suffix_ranks, rep);
  }
  rep.size_ratio = n > 0 ? static_cast<double>(pset.positions.size()) *
                               static_cast<double>(pset.tau) / static_cast<double>(n)
                         : 0.0;
  return rep;
}

PsetReport check_pset(const Text& text, const PartitioningSet& pset) {
  return check_pset(text, pset, nullptr);
}

}  // namespace sslce::oracle
