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

#include <string>

#include "sslce/corpus.hpp"
#include "sslce/oracle.hpp"
#include "sslce/periodicity.hpp"
#include "test_support.hpp"

using namespace sslce;

namespace {

Pos brute_period(const std::string& s) {
  for (Pos y = 1; y < static_cast<Pos>(s.size()); ++y) {
    bool ok = true;
    for (size_t i = 0; ok && i + static_cast<size_t>(y) < s.size(); ++i)
      ok = s[i] == s[i + static_cast<size_t>(y)];
    if (ok) return y;
  }
  return static_cast<Pos>(s.size());
}

Pos period_of(const std::string& s) {
  Text t(s);
  return principal_period(t, 1, t.size());
}

}  // namespace

TEST_CASE("principal period basics") {
  CHECK(period_of("aaaa") == 1);
  CHECK(period_of("abcabcab") == brute_period("abcabcab"));
  CHECK(period_of("abcabcab") == 3);
  CHECK(period_of("abcd") == 4);
  Text empty("");
  CHECK_THROWS_AS(principal_period(empty, 1, 0), std::invalid_argument);
}

TEST_CASE("principal period equals brute force on random strings") {
  for (uint64_t seed = 0; seed < 200; ++seed) {
    Text t = gen_random(1 + static_cast<Pos>(seed % 40), 2 + static_cast<int>(seed % 3), seed);
    std::string s(t.bytes().begin(), t.bytes().end());
    CHECK(principal_period(t, 1, t.size()) == brute_period(s));
  }
}

TEST_CASE("fine and wilf reduction") {
  CHECK(fine_wilf_reduce(6, 2, 3) == 1);
  CHECK(!fine_wilf_reduce(3, 2, 3).has_value());
  CHECK(fine_wilf_reduce(10, 4, 6) == 2);
  CHECK(fine_wilf_reduce(4, 2, 3) == 1);  // 4 >= 2+3-1
}

TEST_CASE("find_runs basics") {
  CHECK(find_runs(Text("aaaaaaaaaa"), 6) == std::vector<Run>{{1, 10, 1}});
  CHECK(find_runs(Text("abcdefghij"), 6).empty());

  std::string s;
  for (int i = 0; i < 8; ++i) s += "aab";
  s += 'z';
  CHECK(find_runs(Text(s), 18) == std::vector<Run>{{1, 24, 3}});

  CHECK_THROWS_AS(find_runs(Text("aaaaaa"), 5), std::invalid_argument);
}

TEST_CASE("find_runs equals naive_runs exhaustively on small binary texts") {
  for (Pos len = 6; len <= 13; ++len) {
    for (const Text& t : testsupport::all_binary_texts(len)) {
      for (Pos tau : {6, 7, 12}) {
        if (tau > len) continue;
        CHECK(find_runs(t, tau) == oracle::naive_runs(t, tau));
      }
    }
  }
}

TEST_CASE("find_runs equals naive_runs on random texts") {
  SplitMix64 rng(2026);
  for (int trial = 0; trial < 3000; ++trial) {
    Pos n = 6 + static_cast<Pos>(rng.next_below(600));
    int sigma = 2 + static_cast<int>(rng.next_below(3));
    Text t = gen_random(n, sigma, rng.next());
    Pos tau = 6 + static_cast<Pos>(rng.next_below(static_cast<uint64_t>(std::min<Pos>(n, 60) - 5)));
    auto got = find_runs(t, tau, rng.next());
    auto want = oracle::naive_runs(t, tau);
    REQUIRE(got == want);

    // Overlap bound between consecutive runs.
    for (size_t k = 0; k + 1 < got.size(); ++k) {
      Pos overlap = got[k].end - got[k + 1].start + 1;
      CHECK(overlap < tau / 3);
    }
  }
}

TEST_CASE("every run contains a full candidate interval") {
  SplitMix64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Pos n = 30 + static_cast<Pos>(rng.next_below(400));
    Text t = gen_random(n, 2, rng.next());
    Pos tau = 6 + 6 * static_cast<Pos>(rng.next_below(4));
    for (const Run& r : find_runs(t, tau)) {
      Pos half = tau / 2;
      bool contains = false;
      for (Pos alpha = 0; (alpha + 1) * half <= n && !contains; ++alpha)
        contains = alpha * half + 1 >= r.start && (alpha + 1) * half <= r.end;
      CHECK(contains);
    }
  }
}

TEST_CASE("segment covers the text with alternating kinds") {
  Text t = gen_random(30, 4, 1);
  CHECK(segment(t, {}) == SegmentList{{1, 30, 0}});
  CHECK(segment(t, {{1, 30, 2}}) == SegmentList{{1, 30, 2}});
  CHECK(segment(t, {{3, 20, 2}}) ==
        SegmentList{{1, 2, 0}, {3, 20, 2}, {21, 30, 0}});
}

TEST_CASE("segment resolves overlaps right to left") {
  // Two overlapping runs: the left one loses its right margin.
  Text t = gen_random(40, 4, 2);
  SegmentList segs = segment(t, {{5, 20, 2}, {18, 33, 3}});
  CHECK(segs == SegmentList{{1, 4, 0}, {5, 17, 2}, {18, 33, 3}, {34, 40, 0}});
}

TEST_CASE("segment invariants on random run sets from find_runs") {
  SplitMix64 rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    Pos n = 12 + static_cast<Pos>(rng.next_below(500));
    Text t = gen_random(n, 2, rng.next());
    Pos tau = 6 + static_cast<Pos>(rng.next_below(20));
    SegmentList segs = segment(t, find_runs(t, tau));
    REQUIRE(!segs.empty());
    CHECK(segs.front().start == 1);
    CHECK(segs.back().end == n);
    for (size_t i = 0; i + 1 < segs.size(); ++i) {
      CHECK(segs[i].end + 1 == segs[i + 1].start);
      CHECK((segs[i].is_run() || segs[i + 1].is_run()));  // no adjacent plains
    }
  }
}
