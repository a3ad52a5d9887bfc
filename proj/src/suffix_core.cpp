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

#include "sslce/suffix_core.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace sslce {

namespace {

// SA-IS on s with symbols in [0, sigma); s must end with the unique smallest
// sentinel 0. Writes suffix indices of s (including the sentinel suffix) to sa.
void sais(const std::vector<int64_t>& s, int64_t sigma, std::vector<int64_t>& sa) {
  const int64_t n = static_cast<int64_t>(s.size());
  sa.assign(static_cast<size_t>(n), -1);
  if (n == 1) {
    sa[0] = 0;
    return;
  }

  std::vector<bool> is_s(static_cast<size_t>(n));
  is_s[static_cast<size_t>(n - 1)] = true;
  for (int64_t i = n - 2; i >= 0; --i)
    is_s[static_cast<size_t>(i)] =
        s[static_cast<size_t>(i)] < s[static_cast<size_t>(i + 1)] ||
        (s[static_cast<size_t>(i)] == s[static_cast<size_t>(i + 1)] && is_s[static_cast<size_t>(i + 1)]);
  auto is_lms = [&](int64_t i) {
    return i > 0 && is_s[static_cast<size_t>(i)] && !is_s[static_cast<size_t>(i - 1)];
  };

  std::vector<int64_t> bucket(static_cast<size_t>(sigma), 0);
  for (int64_t c : s) ++bucket[static_cast<size_t>(c)];
  std::vector<int64_t> bstart(static_cast<size_t>(sigma)), bend(static_cast<size_t>(sigma));
  auto reset_buckets = [&] {
    int64_t sum = 0;
    for (int64_t c = 0; c < sigma; ++c) {
      bstart[static_cast<size_t>(c)] = sum;
      sum += bucket[static_cast<size_t>(c)];
      bend[static_cast<size_t>(c)] = sum;
    }
  };

  auto induce = [&](const std::vector<int64_t>& lms) {
    std::fill(sa.begin(), sa.end(), int64_t(-1));
    reset_buckets();
    for (auto it = lms.rbegin(); it != lms.rend(); ++it)
      sa[static_cast<size_t>(--bend[static_cast<size_t>(s[static_cast<size_t>(*it)])])] = *it;
    reset_buckets();
    for (int64_t k = 0; k < n; ++k) {
      int64_t j = sa[static_cast<size_t>(k)] - 1;
      if (j >= 0 && !is_s[static_cast<size_t>(j)])
        sa[static_cast<size_t>(bstart[static_cast<size_t>(s[static_cast<size_t>(j)])]++)] = j;
    }
    reset_buckets();
    for (int64_t k = n - 1; k >= 0; --k) {
      int64_t j = sa[static_cast<size_t>(k)] - 1;
      if (j >= 0 && is_s[static_cast<size_t>(j)])
        sa[static_cast<size_t>(--bend[static_cast<size_t>(s[static_cast<size_t>(j)])])] = j;
    }
  };

  std::vector<int64_t> lms;
  for (int64_t i = 1; i < n; ++i)
    if (is_lms(i)) lms.push_back(i);
  induce(lms);

  // Name LMS substrings in induced order.
  std::vector<int64_t> name(static_cast<size_t>(n), -1);
  int64_t names = 0, prev = -1;
  for (int64_t k = 0; k < n; ++k) {
    int64_t i = sa[static_cast<size_t>(k)];
    if (!is_lms(i)) continue;
    if (prev >= 0) {
      int64_t a = prev, b = i;
      bool same = true;
      while (true) {
        if (s[static_cast<size_t>(a)] != s[static_cast<size_t>(b)] ||
            is_lms(a) != is_lms(b)) {
          same = false;
          break;
        }
        ++a, ++b;
        if (a == n || b == n) {
          same = a == n && b == n;
          break;
        }
        if (is_lms(a) || is_lms(b)) {
          same = is_lms(a) && is_lms(b) &&
                 s[static_cast<size_t>(a)] == s[static_cast<size_t>(b)];
          break;
        }
      }
      if (!same) ++names;
    }
    prev = i;
    name[static_cast<size_t>(i)] = names;
  }
  ++names;

  std::vector<int64_t> order(lms.size());
  if (names == static_cast<int64_t>(lms.size())) {
    for (size_t k = 0; k < lms.size(); ++k)
      order[static_cast<size_t>(name[static_cast<size_t>(lms[k])])] = lms[k];
  } else {
    std::vector<int64_t> reduced(lms.size());
    for (size_t k = 0; k < lms.size(); ++k)
      reduced[k] = name[static_cast<size_t>(lms[k])];
    std::vector<int64_t> rsa;
    sais(reduced, names, rsa);
    for (size_t k = 0; k < lms.size(); ++k)
      order[k] = lms[static_cast<size_t>(rsa[k])];
  }
  induce(order);
}

}  // namespace

std::vector<int64_t> suffix_array(const std::vector<int64_t>& s) {
  const int64_t n = static_cast<int64_t>(s.size());
  if (n == 0) return {};

  // Rank-compress to [1..sigma), append sentinel 0.
  std::vector<int64_t> sorted(s);
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.front() < 0) throw std::invalid_argument("suffix_array: negative symbol");
  std::vector<int64_t> t(static_cast<size_t>(n) + 1);
  for (int64_t i = 0; i < n; ++i)
    t[static_cast<size_t>(i)] =
        1 + (std::lower_bound(sorted.begin(), sorted.end(), s[static_cast<size_t>(i)]) -
             sorted.begin());
  t[static_cast<size_t>(n)] = 0;

  std::vector<int64_t> sa;
  sais(t, static_cast<int64_t>(sorted.size()) + 1, sa);
  return {sa.begin() + 1, sa.end()};  // drop the sentinel suffix
}

std::vector<int64_t> lcp_kasai(const std::vector<int64_t>& s, const std::vector<int64_t>& sa) {
  const int64_t n = static_cast<int64_t>(s.size());
  if (n == 0) return {};
  std::vector<int64_t> rank(static_cast<size_t>(n)), lcp(static_cast<size_t>(n) - 1, 0);
  for (int64_t k = 0; k < n; ++k) rank[static_cast<size_t>(sa[static_cast<size_t>(k)])] = k;
  int64_t h = 0;
  for (int64_t i = 0; i < n; ++i) {
    int64_t r = rank[static_cast<size_t>(i)];
    if (r + 1 == n) {
      h = 0;
      continue;
    }
    int64_t j = sa[static_cast<size_t>(r + 1)];
    while (i + h < n && j + h < n &&
           s[static_cast<size_t>(i + h)] == s[static_cast<size_t>(j + h)])
      ++h;
    lcp[static_cast<size_t>(r)] = h;
    if (h > 0) --h;
  }
  return lcp;
}

RmqSparseTable::RmqSparseTable(std::vector<int64_t> values) : values_(std::move(values)) {
  const int64_t m = static_cast<int64_t>(values_.size());
  if (m == 0) return;
  int levels = std::bit_width(static_cast<uint64_t>(m));
  rows_.resize(static_cast<size_t>(levels));
  rows_[0].resize(static_cast<size_t>(m));
  std::iota(rows_[0].begin(), rows_[0].end(), 0);
  for (int j = 1; j < levels; ++j) {
    int64_t span = int64_t(1) << j;
    rows_[static_cast<size_t>(j)].resize(static_cast<size_t>(m - span + 1));
    for (int64_t i = 0; i + span <= m; ++i) {
      int32_t a = rows_[static_cast<size_t>(j - 1)][static_cast<size_t>(i)];
      int32_t b = rows_[static_cast<size_t>(j - 1)][static_cast<size_t>(i + span / 2)];
      rows_[static_cast<size_t>(j)][static_cast<size_t>(i)] =
          values_[static_cast<size_t>(b)] < values_[static_cast<size_t>(a)] ? b : a;
    }
  }
}

RmqSparseTable::RmqSparseTable(std::vector<int64_t> values,
                               std::vector<std::vector<int32_t>> rows)
    : values_(std::move(values)), rows_(std::move(rows)) {}

int64_t RmqSparseTable::argmin(int64_t l, int64_t r) const {
  if (l > r || l < 0 || r >= static_cast<int64_t>(values_.size()))
    throw std::out_of_range("rmq: empty or invalid range");
  int j = std::bit_width(static_cast<uint64_t>(r - l + 1)) - 1;
  int32_t a = rows_[static_cast<size_t>(j)][static_cast<size_t>(l)];
  int32_t b = rows_[static_cast<size_t>(j)][static_cast<size_t>(r - (int64_t(1) << j) + 1)];
  // Leftmost argmin on ties.
  if (values_[static_cast<size_t>(a)] <= values_[static_cast<size_t>(b)]) return a;
  return b;
}

int64_t RmqSparseTable::min_value(int64_t l, int64_t r) const {
  return values_[static_cast<size_t>(argmin(l, r))];
}

std::vector<int64_t> sort_strings(int64_t count,
                                  const std::function<int64_t(int64_t)>& key_len,
                                  const std::function<uint64_t(int64_t, int64_t)>& key_sym) {
  return sort_strings_lazy(count, key_len, key_sym);
}

std::vector<int64_t> sort_strings(const std::vector<std::vector<uint64_t>>& keys) {
  return sort_strings_lazy(
      static_cast<int64_t>(keys.size()),
      [&](int64_t i) { return static_cast<int64_t>(keys[static_cast<size_t>(i)].size()); },
      [&](int64_t i, int64_t d) { return keys[static_cast<size_t>(i)][static_cast<size_t>(d)]; });
}

}  // namespace sslce
