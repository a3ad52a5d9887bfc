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
#include <functional>
#include <vector>

namespace sslce {

/// Suffix array of s (0-based suffix start indices in lexicographic order),
/// SA-IS over the integer alphabet. Symbols must be non-negative; they are
/// rank-compressed internally.
std::vector<int64_t> suffix_array(const std::vector<int64_t>& s);

/// lcp[k] = LCP(s[sa[k]..], s[sa[k+1]..]); size |s|-1. Kasai's algorithm.
std::vector<int64_t> lcp_kasai(const std::vector<int64_t>& s, const std::vector<int64_t>& sa);

/// Sparse-table range minimum. Query returns the index of the minimum,
/// leftmost on ties; O(1) per query after O(m log m) build.
class RmqSparseTable {
 public:
  RmqSparseTable() = default;
  explicit RmqSparseTable(std::vector<int64_t> values);

  /// Rebuild from serialized rows (values + precomputed argmin levels).
  RmqSparseTable(std::vector<int64_t> values, std::vector<std::vector<int32_t>> rows);

  int64_t argmin(int64_t l, int64_t r) const;  // inclusive range
  int64_t min_value(int64_t l, int64_t r) const;

  const std::vector<int64_t>& values() const { return values_; }
  const std::vector<std::vector<int32_t>>& rows() const { return rows_; }

 private:
  std::vector<int64_t> values_;
  std::vector<std::vector<int32_t>> rows_;  // rows_[j][i] = argmin of [i, i+2^j)
};

namespace detail {

/// MSD radix descent over lazily accessed keys. Ranks are assigned in DFS
/// (lexicographic) order; buckets that are uniform at the current depth skip
/// the sorting pass entirely, which keeps highly repetitive key sets linear.
template <typename LenFn, typename SymFn>
void msd_rank(std::vector<int64_t>& idx, int64_t lo, int64_t hi, int64_t depth,
              const LenFn& key_len, const SymFn& key_sym, std::vector<int64_t>& ranks,
              int64_t& next_rank) {
  while (true) {
    if (hi - lo == 1) {
      ranks[static_cast<size_t>(idx[static_cast<size_t>(lo)])] = next_rank++;
      return;
    }
    auto mid = std::stable_partition(idx.begin() + lo, idx.begin() + hi,
                                     [&](int64_t k) { return key_len(k) <= depth; });
    int64_t first_live = mid - idx.begin();
    if (first_live > lo) {
      // exhausted keys share the whole prefix: one rank for all of them
      for (int64_t k = lo; k < first_live; ++k)
        ranks[static_cast<size_t>(idx[static_cast<size_t>(k)])] = next_rank;
      ++next_rank;
    }
    lo = first_live;
    if (hi - lo == 0) return;
    if (hi - lo == 1) {
      ranks[static_cast<size_t>(idx[static_cast<size_t>(lo)])] = next_rank++;
      return;
    }
    uint64_t first = key_sym(idx[static_cast<size_t>(lo)], depth);
    bool uniform = true;
    for (int64_t k = lo + 1; k < hi && uniform; ++k)
      uniform = key_sym(idx[static_cast<size_t>(k)], depth) == first;
    if (uniform) {
      ++depth;
      continue;
    }
    std::stable_sort(idx.begin() + lo, idx.begin() + hi, [&](int64_t a, int64_t b) {
      return key_sym(a, depth) < key_sym(b, depth);
    });
    int64_t i = lo;
    while (i < hi) {
      uint64_t c = key_sym(idx[static_cast<size_t>(i)], depth);
      int64_t j = i + 1;
      while (j < hi && key_sym(idx[static_cast<size_t>(j)], depth) == c) ++j;
      msd_rank(idx, i, j, depth + 1, key_len, key_sym, ranks, next_rank);
      i = j;
    }
    return;
  }
}

}  // namespace detail

/// Lexicographic ranks of `count` integer-sequence keys accessed lazily:
/// key_len(i) is the length of key i and key_sym(i, d) its d-th symbol.
/// Equal keys collapse to one rank; ranks are dense from 0.
template <typename LenFn, typename SymFn>
std::vector<int64_t> sort_strings_lazy(int64_t count, const LenFn& key_len,
                                       const SymFn& key_sym) {
  std::vector<int64_t> idx(static_cast<size_t>(count));
  for (int64_t i = 0; i < count; ++i) idx[static_cast<size_t>(i)] = i;
  std::vector<int64_t> ranks(static_cast<size_t>(count), 0);
  int64_t next_rank = 0;
  if (count > 0) detail::msd_rank(idx, 0, count, 0, key_len, key_sym, ranks, next_rank);
  return ranks;
}

std::vector<int64_t> sort_strings(int64_t count,
                                  const std::function<int64_t(int64_t)>& key_len,
                                  const std::function<uint64_t(int64_t, int64_t)>& key_sym);

/// Convenience overload for materialized keys.
std::vector<int64_t> sort_strings(const std::vector<std::vector<uint64_t>>& keys);

}  // namespace sslce
