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

#include "sslce/sparse_suffix.hpp"

#include <algorithm>
#include <stdexcept>

#include "sslce/suffix_core.hpp"
#include "sslce/util.hpp"

namespace sslce {

Pos right_violation(const Text& text, Pos p, Pos rho) {
  if (rho < 1 || p + rho > text.size()) throw std::invalid_argument("right_violation: bad args");
  Pos j = p + rho + 1;
  while (text.sym(j) == text.sym(j - rho)) ++j;  // sentinel stops at n+1
  return j;
}

namespace {

// Key symbol bands: characters live in [0..257), the sign pair and the
// signed violation distance in disjoint higher bands. The sign orders
// violation-below-period blocks before violation-above-period ones, and the
// signed distance orders block lengths accordingly within each sign.
constexpr uint64_t kSignBand = uint64_t(1) << 20;
constexpr uint64_t kDistBand = uint64_t(1) << 40;

struct RepKey {
  Pos anchor = 0;     // key prefix starts here (block start, or B position)
  Pos rv = 0;         // right violation position; 0 for plain keys
  bool negative = false;  // violation char below period char
};

// Builds the (sign, distance) augmentation for a periodic block around
// `anchor`. rv/rho describe the covering block.
RepKey make_periodic_key(const Text& text, Pos anchor, Pos rv, Pos rho) {
  RepKey k;
  k.anchor = anchor;
  k.rv = rv;
  k.negative = text.sym(rv) < text.sym(rv - rho);
  return k;
}

struct KeyView {
  const Text* text;
  Pos delta;
  std::vector<RepKey> keys;

  int64_t len(int64_t i) const {
    return keys[static_cast<size_t>(i)].rv ? 5 * delta + 2 : 3 * delta;
  }
  uint64_t sym(int64_t i, int64_t d) const {
    const RepKey& k = keys[static_cast<size_t>(i)];
    if (d < 3 * delta) return static_cast<uint64_t>(text->sym(k.anchor + d));
    if (d == 3 * delta) return kSignBand + (k.negative ? 0 : 1);
    if (d == 3 * delta + 1) {
      Pos dist = k.rv - k.anchor;
      return k.negative ? kDistBand + static_cast<uint64_t>(dist)
                        : kDistBand - static_cast<uint64_t>(dist);
    }
    return static_cast<uint64_t>(text->sym(k.rv + (d - 3 * delta - 2)));
  }
};

}  // namespace

std::vector<Pos> ssa_of_pset(const Text& text, const PartitioningSet& pset) {
  if (!pset.forward_sync)
    throw std::invalid_argument("ssa_of_pset: partitioning set must be forward synchronized");
  const auto& p = pset.positions;
  if (p.empty()) return {};
  Pos n = text.size();

  KeyView view{&text, pset.delta, {}};
  view.keys.reserve(p.size());
  for (size_t i = 0; i < p.size(); ++i) {
    Pos s = p[i];
    Pos e = (i + 1 < p.size() ? p[i + 1] : n + 1) - 1;
    Pos rho = pset.period_of_block(s);
    if (e - s + 1 > pset.tau && rho > 0) {
      view.keys.push_back(make_periodic_key(text, s, right_violation(text, s, rho), rho));
    } else {
      view.keys.push_back({s, 0, false});
    }
  }

  std::vector<int64_t> ranks = sort_strings_lazy(
      static_cast<int64_t>(p.size()), [&](int64_t i) { return view.len(i); },
      [&](int64_t i, int64_t d) { return view.sym(i, d); });

  std::vector<int64_t> sa = suffix_array(ranks);  // S'_P
  std::vector<Pos> out(p.size());
  for (size_t k = 0; k < p.size(); ++k) out[k] = p[static_cast<size_t>(sa[k])];
  return out;
}

std::vector<Pos> ssa_of_B(const Text& text, const std::vector<Pos>& b,
                          const PartitioningSet& pset, const std::vector<Pos>& pset_ssa) {
  if (b.empty()) return {};
  Pos n = text.size();
  const Pos delta = pset.delta;
  for (Pos i : b)
    if (i < 1 || i > n) throw std::out_of_range("ssa_of_B: position outside text");

  auto starts = block_starts(pset);
  auto block_of = [&](Pos x) -> int64_t {  // block whose range contains x
    auto it = std::upper_bound(starts.begin(), starts.end(), x);
    return static_cast<int64_t>(it - starts.begin()) - 1;
  };
  auto block_end = [&](int64_t k) {
    return (static_cast<size_t>(k + 1) < starts.size() ? starts[static_cast<size_t>(k + 1)]
                                                       : n + 1) -
           1;
  };

  KeyView view{&text, delta, {}};
  view.keys.reserve(b.size());
  for (Pos i : b) {
    // Augment when the last 2*delta characters of the window sit inside one
    // long periodic block.
    Pos tail_lo = i + delta, tail_hi = i + 3 * delta - 1;
    RepKey key{i, 0, false};
    if (tail_hi <= n) {
      int64_t blk = block_of(tail_lo);
      if (blk >= 0) {
        Pos bs = starts[static_cast<size_t>(blk)];
        Pos be = block_end(blk);
        Pos rho = pset.period_of_block(bs);
        if (rho > 0 && be >= tail_hi)
          key = make_periodic_key(text, i, right_violation(text, bs, rho), rho);
      }
    }
    view.keys.push_back(key);
  }

  std::vector<int64_t> r = sort_strings_lazy(
      static_cast<int64_t>(b.size()), [&](int64_t i) { return view.len(i); },
      [&](int64_t i, int64_t d) { return view.sym(i, d); });

  // rank of each pset position's suffix within the pset SSA
  std::vector<int64_t> rank_of_pos(pset.positions.size());
  {
    std::vector<std::pair<Pos, int64_t>> tmp(pset_ssa.size());
    for (size_t k = 0; k < pset_ssa.size(); ++k) tmp[k] = {pset_ssa[k], static_cast<int64_t>(k)};
    std::sort(tmp.begin(), tmp.end());
    for (size_t k = 0; k < tmp.size(); ++k) rank_of_pos[k] = tmp[k].second;
  }
  auto suffix_rank_at = [&](Pos alpha) -> int64_t {  // suc_P(alpha) rank, -1 if none
    auto it = std::lower_bound(pset.positions.begin(), pset.positions.end(), alpha);
    if (it == pset.positions.end()) return -1;
    return rank_of_pos[static_cast<size_t>(it - pset.positions.begin())];
  };

  std::vector<uint64_t> pair_key(b.size());
  for (size_t k = 0; k < b.size(); ++k) {
    int64_t x = suffix_rank_at(b[k] + delta);
    pair_key[k] = (static_cast<uint64_t>(r[k]) << 32) |
                  static_cast<uint64_t>(static_cast<uint32_t>(x + 1));
  }

  std::vector<int64_t> order(b.size());
  for (size_t k = 0; k < b.size(); ++k) order[k] = static_cast<int64_t>(k);
  if (pset.tau <= isqrt_floor(n)) {
    // LSD radix over 16-bit digits of the packed (r, x) key.
    std::vector<int64_t> tmp(order.size());
    for (int pass = 0; pass < 4; ++pass) {
      int shift = 16 * pass;
      size_t cnt[65536] = {0};
      for (int64_t id : order) ++cnt[(pair_key[static_cast<size_t>(id)] >> shift) & 0xffff];
      size_t sum = 0;
      for (auto& c : cnt) {
        size_t t = c;
        c = sum;
        sum += t;
      }
      for (int64_t id : order)
        tmp[cnt[(pair_key[static_cast<size_t>(id)] >> shift) & 0xffff]++] = id;
      order.swap(tmp);
    }
  } else {
    std::stable_sort(order.begin(), order.end(), [&](int64_t a, int64_t c) {
      return pair_key[static_cast<size_t>(a)] < pair_key[static_cast<size_t>(c)];
    });
  }

  std::vector<Pos> out(b.size());
  for (size_t k = 0; k < b.size(); ++k) out[k] = b[static_cast<size_t>(order[k])];
  return out;
}

SparseSuffixIndex build_sst(const Text& text, const std::vector<Pos>& ssa,
                            const LceIndex& lce_idx) {
  std::vector<Pos> lcp;
  for (size_t k = 0; k + 1 < ssa.size(); ++k) lcp.push_back(lce_idx.lce(ssa[k], ssa[k + 1]));
  return build_sst_arrays(text.size(), ssa, std::move(lcp));
}

SparseSuffixIndex build_sst_arrays(Pos n, std::vector<Pos> ssa, std::vector<Pos> lcp) {
  SparseSuffixIndex sst;
  sst.ssa = std::move(ssa);
  sst.lcp = std::move(lcp);
  size_t m = sst.ssa.size();
  sst.nodes.push_back({-1, 0, m ? sst.ssa[0] : 1, 0, {}});
  if (m == 0) return sst;

  // Left-to-right construction with the rightmost-path stack. Leaf depths
  // count one virtual terminator beyond the suffix, so a suffix that is a
  // prefix of another still hangs below a proper internal node.
  std::vector<int64_t> stack{0};
  auto depth = [&](int64_t v) { return sst.nodes[static_cast<size_t>(v)].depth; };
  auto add_child = [&](int64_t parent, int64_t child) {
    sst.nodes[static_cast<size_t>(child)].parent = parent;
    sst.nodes[static_cast<size_t>(parent)].children.push_back(child);
  };
  for (size_t k = 0; k < m; ++k) {
    Pos leaf_depth = n - sst.ssa[k] + 2;
    int64_t leaf = static_cast<int64_t>(sst.nodes.size());
    sst.nodes.push_back({-1, leaf_depth, sst.ssa[k], sst.ssa[k], {}});
    if (k == 0) {
      add_child(0, leaf);
      stack.push_back(leaf);
      continue;
    }
    Pos l = sst.lcp[k - 1];
    int64_t last_popped = -1;
    while (depth(stack.back()) > l) {
      last_popped = stack.back();
      stack.pop_back();
    }
    int64_t attach = stack.back();
    if (depth(attach) < l) {
      // split: insert an internal node of depth l above last_popped
      int64_t inner = static_cast<int64_t>(sst.nodes.size());
      sst.nodes.push_back({-1, l, sst.ssa[k], 0, {}});
      auto& pc = sst.nodes[static_cast<size_t>(attach)].children;
      pc.erase(std::find(pc.begin(), pc.end(), last_popped));
      add_child(attach, inner);
      add_child(inner, last_popped);
      stack.push_back(inner);
      attach = inner;
    }
    add_child(attach, leaf);
    stack.push_back(leaf);
  }
  return sst;
}

int64_t SparseSuffixIndex::leaves() const {
  int64_t c = 0;
  for (const auto& nd : nodes)
    if (nd.leaf_pos > 0) ++c;
  return c;
}

int64_t SparseSuffixIndex::internal_nodes() const {
  int64_t c = 0;
  for (size_t k = 1; k < nodes.size(); ++k)
    if (nodes[k].leaf_pos == 0) ++c;
  return c;
}

std::string SparseSuffixIndex::export_records() const {
  std::string out;
  for (size_t k = 0; k < ssa.size(); ++k) {
    out += std::to_string(ssa[k]);
    out += ' ';
    out += std::to_string(k == 0 ? 0 : lcp[k - 1]);
    out += '\n';
  }
  return out;
}

namespace {

void export_node(const SparseSuffixIndex& sst, int64_t v, std::string& out) {
  const SstNode& nd = sst.nodes[static_cast<size_t>(v)];
  out += '(';
  out += std::to_string(nd.depth);
  if (nd.leaf_pos > 0) {
    out += ':';
    out += std::to_string(nd.leaf_pos);
  }
  for (int64_t c : nd.children) export_node(sst, c, out);
  out += ')';
}

}  // namespace

std::string SparseSuffixIndex::export_trie() const {
  std::string out;
  export_node(*this, 0, out);
  return out;
}

}  // namespace sslce
