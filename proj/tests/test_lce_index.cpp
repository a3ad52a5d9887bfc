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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "sslce/corpus.hpp"
#include "sslce/lce_index.hpp"
#include "sslce/oracle.hpp"
#include "sslce/partition_det.hpp"
#include "sslce/partition_rand.hpp"
#include "test_support.hpp"

using namespace sslce;

namespace {

PartitioningSet manual_pset(const Text& text, std::vector<Pos> positions, Pos tau, Pos delta) {
  PartitioningSet p;
  p.positions = std::move(positions);
  p.tau = tau;
  p.delta = delta;
  p.forward_sync = false;
  fill_block_periods(text, p);
  return p;
}

}  // namespace

TEST_CASE("rank_blocks assigns equal ranks to equal blocks") {
  Text t("ababababab");
  // blocks: [1..4] "abab", [5..8] "abab", [9..10] "ab"
  auto p = manual_pset(t, {5, 9}, 4, 4);
  auto [ranks, distinct] = rank_blocks(t, p);
  REQUIRE(ranks.size() == 3);
  CHECK(ranks[0] == ranks[1]);
  CHECK(ranks[0] != ranks[2]);
  CHECK(distinct == 2);
}

TEST_CASE("rank_blocks distinguishes periodic blocks by length") {
  // Two long periodic blocks with the same 2*tau prefix but lengths 30 vs 40.
  std::string s = std::string(30, 'a') + "b" + std::string(40, 'a') + "b";
  Text t(s);
  auto p = manual_pset(t, {31, 32, 72}, 4, 4);
  // blocks: [1..30] (a^30), [31..31] "b", [32..71] (a^40), [72..72] "b"
  auto [ranks, distinct] = rank_blocks(t, p);
  REQUIRE(ranks.size() == 4);
  CHECK(ranks[0] != ranks[2]);  // same prefix, different length symbol
  CHECK(ranks[1] == ranks[3]);
  CHECK(distinct == 3);
}

TEST_CASE("rank_blocks: all-distinct single characters permute") {
  Text t("dcba");
  auto p = manual_pset(t, {2, 3, 4}, 1, 1);
  auto [ranks, distinct] = rank_blocks(t, p);
  CHECK(distinct == 4);
  std::set<int64_t> uniq(ranks.begin(), ranks.end());
  CHECK(uniq.size() == 4);
  CHECK(ranks == std::vector<int64_t>{3, 2, 1, 0});
}

TEST_CASE("block_lcp on a handmade partitioning") {
  // text abababx: blocks [1..2] ab, [3..4] ab, [5..6] ab, [7..7] x
  Text t("abababx");
  auto p = manual_pset(t, {3, 5, 7}, 2, 2);
  LceIndex idx = build_lce(t, p);
  CHECK(idx.block_lcp(0, 1) == 4);  // ab ab vs ab ab|x : blocks 0,1 == 1,2 then 2 vs 3 differ
  CHECK(idx.block_lcp(0, 0) == 7);
  CHECK(idx.block_lcp(0, 3) == 0);
  CHECK(idx.block_lcp(1, 2) == 2);
}

TEST_CASE("single-block partition") {
  Text t("abcabc");
  auto p = manual_pset(t, {}, 6, 6);
  LceIndex idx = build_lce(t, p);
  CHECK(idx.partitioning_string().size() == 1);
  CHECK(idx.block_lcp(0, 0) == 6);
  CHECK(idx.lce(1, 4) == 3);
}

TEST_CASE("successor matches a linear scan") {
  SplitMix64 rng(15);
  Text t = gen_random(2000, 3, 1);
  auto p = build_rand(t, 16, 4);
  LceIndex idx = build_lce(t, p);
  const auto& starts = idx.block_start_positions();
  for (int q = 0; q < 10000; ++q) {
    Pos alpha = 1 + static_cast<Pos>(rng.next_below(static_cast<uint64_t>(t.size() + 10)));
    auto got = idx.successor_block(alpha);
    auto it = std::lower_bound(starts.begin(), starts.end(), alpha);
    if (it == starts.end()) {
      CHECK(!got.has_value());
    } else {
      REQUIRE(got.has_value());
      CHECK(starts[static_cast<size_t>(*got)] == *it);
    }
  }
}

TEST_CASE("lce identity and basic example") {
  Text t("abaababa");
  auto p = build_rand(t, 2, 1);
  LceIndex idx = build_lce(t, p);
  CHECK(idx.lce(1, 1) == 8);
  CHECK(idx.lce(5, 5) == 4);
  CHECK(idx.lce(1, 4) == 3);
  CHECK_THROWS_AS(idx.lce(0, 3), std::out_of_range);
  CHECK_THROWS_AS(idx.lce(1, 9), std::out_of_range);
}

TEST_CASE("lce equals the naive scan across text families and modes") {
  SplitMix64 rng(2026);
  std::vector<Text> texts{gen_random(4000, 2, 1), gen_random(4000, 26, 2),
                          gen_periodic(4000, 3, 0), gen_fibonacci(4000),
                          gen_thue_morse(4000)};
  for (const auto& t : texts) {
    for (Pos tau : {2, 7, 16, 63}) {
      for (int mode = 0; mode < 2; ++mode) {
        PartitioningSet p = mode == 0 ? build_rand(t, tau, 9) : build_det(t, tau);
        LceIndex idx = build_lce(t, p);
        for (int q = 0; q < 4000; ++q) {
          Pos i = 1 + static_cast<Pos>(rng.next_below(static_cast<uint64_t>(t.size())));
          Pos j = 1 + static_cast<Pos>(rng.next_below(static_cast<uint64_t>(t.size())));
          Pos want = oracle::naive_lce(t, i, j);
          Pos got = idx.lce(i, j);
          REQUIRE_MESSAGE(got == want, "i=" << i << " j=" << j << " tau=" << tau
                                            << " mode=" << mode);
        }
      }
    }
  }
}

TEST_CASE("lce exhaustive pairs on small structured texts") {
  for (const Text& t : {Text("aabaabaabaabaab"), Text(std::string(24, 'a')),
                        gen_thue_morse(20)}) {
    for (Pos tau : {1, 2, 3, 5, 8}) {
      if (tau > t.size()) continue;
      auto p = build_rand(t, tau, 3);
      LceIndex idx = build_lce(t, p);
      for (Pos i = 1; i <= t.size(); ++i)
        for (Pos j = 1; j <= t.size(); ++j)
          REQUIRE(idx.lce(i, j) == oracle::naive_lce(t, i, j));
    }
  }
}

TEST_CASE("comparison budget stays proportional to delta") {
  SplitMix64 rng(5);
  for (const Text& t : {gen_random(20000, 4, 3), gen_periodic(20000, 2, 0),
                        gen_fibonacci(20000)}) {
    for (Pos tau : {8, 64}) {
      auto p = build_rand(t, tau, 11);
      LceIndex idx = build_lce(t, p);
      int64_t worst = 0;
      for (int q = 0; q < 20000; ++q) {
        Pos i = 1 + static_cast<Pos>(rng.next_below(static_cast<uint64_t>(t.size())));
        Pos j = 1 + static_cast<Pos>(rng.next_below(static_cast<uint64_t>(t.size())));
        auto st = idx.lce_stats(i, j);
        REQUIRE(st.lce == oracle::naive_lce(t, i, j));
        worst = std::max(worst, st.comparisons);
      }
      CHECK(worst <= 64 * p.delta);
    }
  }
}

TEST_CASE("center blocks coincide for long extensions") {
  // Lemma about P-offsets agreeing inside the shared middle.
  Text t = gen_fibonacci(3000);
  Pos tau = 8;
  auto p = build_rand(t, tau, 7);
  std::set<Pos> pos(p.positions.begin(), p.positions.end());
  SplitMix64 rng(31);
  int checked = 0;
  for (int q = 0; q < 30000 && checked < 300; ++q) {
    Pos i = 1 + static_cast<Pos>(rng.next_below(static_cast<uint64_t>(t.size())));
    Pos j = 1 + static_cast<Pos>(rng.next_below(static_cast<uint64_t>(t.size())));
    if (i == j) continue;
    Pos l = oracle::naive_lce(t, i, j);
    if (l <= 2 * p.delta) continue;
    ++checked;
    std::set<Pos> oi, oj;
    for (Pos x = i + p.delta; x <= i + l - p.delta - 1; ++x)
      if (pos.count(x)) oi.insert(x - i);
    for (Pos x = j + p.delta; x <= j + l - p.delta - 1; ++x)
      if (pos.count(x)) oj.insert(x - j);
    REQUIRE(oi == oj);
  }
  CHECK(checked > 0);
}

TEST_CASE("queries leave the index untouched") {
  Text t = gen_random(2000, 3, 8);
  auto p = build_rand(t, 16, 2);
  LceIndex idx = build_lce(t, p);
  auto digest = [&idx] {
    uint64_t h = 1469598103934665603ull;
    auto mix = [&h](uint64_t v) { h = (h ^ v) * 1099511628211ull; };
    for (auto v : idx.partitioning_string()) mix(static_cast<uint64_t>(v));
    for (auto v : idx.sa()) mix(static_cast<uint64_t>(v));
    for (auto v : idx.lcp()) mix(static_cast<uint64_t>(v));
    for (auto v : idx.successor_samples()) mix(static_cast<uint64_t>(v));
    for (auto v : idx.pset().positions) mix(static_cast<uint64_t>(v));
    return h;
  };
  uint64_t before = digest();
  SplitMix64 rng(9);
  for (int q = 0; q < 5000; ++q) {
    Pos i = 1 + static_cast<Pos>(rng.next_below(2000));
    Pos j = 1 + static_cast<Pos>(rng.next_below(2000));
    idx.lce(i, j);
  }
  CHECK(digest() == before);
}
