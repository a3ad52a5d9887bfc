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
#include "sslce/oracle.hpp"
#include "sslce/partition_rand.hpp"
#include "test_support.hpp"

using namespace sslce;

TEST_CASE("select_plain: one window selects exactly its argmins") {
  Text t = gen_random(64, 4, 1);
  Pos tau = 8;
  auto phi = Fingerprinter::seeded(t.size(), 2);
  auto h = MinwiseHasher::seeded(3);
  auto got = select_plain(t, 10, 17, tau, phi, h);  // length exactly tau
  auto want = testsupport::window_argmin_oracle(t, 10, 10, tau, phi, h);
  CHECK(got == want);
  CHECK(select_plain(t, 10, 16, tau, phi, h).empty());  // shorter than tau
}

TEST_CASE("select_plain equals the quadratic window oracle") {
  SplitMix64 rng(42);
  for (int trial = 0; trial < 300; ++trial) {
    Pos n = 20 + static_cast<Pos>(rng.next_below(200));
    Text t = gen_random(n, 2 + static_cast<int>(rng.next_below(3)), rng.next());
    Pos tau = 2 + static_cast<Pos>(rng.next_below(14));
    if (tau > n) continue;
    auto phi = Fingerprinter::seeded(n, rng.next());
    auto h = MinwiseHasher::seeded(rng.next());
    Pos s = 1 + static_cast<Pos>(rng.next_below(static_cast<uint64_t>(n / 2)));
    Pos e = s + tau - 1 + static_cast<Pos>(rng.next_below(static_cast<uint64_t>(n - s - tau + 2)));
    if (e > n) e = n;
    auto got = select_plain(t, s, e, tau, phi, h);
    Pos whi = std::min(e, n - tau + 1) - tau + 1;
    auto want = whi >= s ? testsupport::window_argmin_oracle(t, s, whi, tau, phi, h)
                         : std::vector<Pos>{};
    REQUIRE(got == want);
  }
}

TEST_CASE("select_plain: equal contexts inside one segment agree") {
  // Build a text with planted repeats and check the pairwise property
  // empirically on a run-free segment.
  SplitMix64 rng(5);
  int found = 0;
  for (int trial = 0; trial < 40 && found < 10; ++trial) {
    Pos n = 400;
    Text t = gen_random(n, 2, rng.next());
    Pos tau = 6;
    if (!find_runs(t, tau).empty()) continue;
    auto phi = Fingerprinter::seeded(n, rng.next());
    auto h = MinwiseHasher::seeded(rng.next());
    auto sel = select_plain(t, 1, n, tau, phi, h);
    std::set<Pos> selected(sel.begin(), sel.end());
    // contexts of radius 3*tau/2 around each position
    Pos rad = 3 * tau / 2;
    for (Pos i = 1 + rad; i + rad <= n - tau + 1; ++i)
      for (Pos j = i + 1; j + rad <= n - tau + 1; ++j) {
        if (!t.range_equal(i - rad, j - rad, 2 * rad + 1)) continue;
        ++found;
        CHECK(selected.count(i) == selected.count(j));
      }
  }
}

TEST_CASE("build_rand on a constant text selects at most two positions") {
  Text t(std::string(100, 'a'));
  auto p = build_rand(t, 12, 7);
  CHECK(p.positions.size() <= 2);
  CHECK(!p.positions.empty());
  CHECK(p.positions.front() == 1);
  CHECK(oracle::check_pset(t, p).ok);
}

TEST_CASE("build_rand with tau 1 selects every position") {
  Text t = gen_random(50, 4, 11);
  auto p = build_rand(t, 1, 3);
  CHECK(static_cast<Pos>(p.positions.size()) == t.size());
  CHECK(oracle::check_pset(t, p).ok);
}

TEST_CASE("build_rand satisfies Def.1 and forward sync across seeds") {
  Text t = gen_random(10000, 4, 2026);
  auto ranks = oracle::suffix_rank_oracle(t);
  for (uint64_t seed = 0; seed < 200; ++seed) {
    auto p = build_rand(t, 32, seed);
    auto rep = oracle::check_pset(t, p, &ranks);
    REQUIRE_MESSAGE(rep.ok, rep.first_violation);
  }
}

TEST_CASE("build_rand handles periodic and structured texts") {
  SplitMix64 rng(17);
  std::vector<Text> texts;
  texts.push_back(gen_periodic(3000, 2, 0));
  texts.push_back(gen_fibonacci(3000));
  texts.push_back(gen_thue_morse(3000));
  texts.push_back(gen_random(3000, 2, 5));
  for (const auto& t : texts) {
    auto ranks = oracle::suffix_rank_oracle(t);
    for (Pos tau : {2, 6, 16, 64}) {
      for (int s = 0; s < 5; ++s) {
        auto p = build_rand(t, tau, rng.next());
        auto rep = oracle::check_pset(t, p, &ranks);
        REQUIRE_MESSAGE(rep.ok, rep.first_violation);
      }
    }
  }
}

TEST_CASE("estimate census equals the exact restricted count") {
  Text t = gen_random(1000, 3, 5);
  Pos tau = 16;
  SplitMix64 root(77);
  auto phi = Fingerprinter::seeded(t.size(), root.next());
  auto h = MinwiseHasher::seeded(root.next());

  auto runs = find_runs(t, tau, phi);
  SegmentList segs = segment(t, runs);
  auto est = estimate_size_sampling(t, tau, phi, h, 1 << 20, 0, &segs);
  CHECK(est.census);

  // Exact count over the covered prefix, via the same plan scanned fully.
  SelectionPlan plan = make_selection_plan(segs, tau, t.size());
  std::set<Pos> all(plan.run_starts.begin(), plan.run_starts.end());
  for (auto [wlo, whi] : plan.regions) {
    auto sel = select_plain(t, wlo, whi + tau - 1, tau, phi, h);
    all.insert(sel.begin(), sel.end());
  }
  if (plan.extra_pick) all.insert(*plan.extra_pick);
  Pos covered = (t.size() / tau) * tau;
  int64_t exact = 0;
  for (Pos p : all)
    if (p <= covered) ++exact;
  CHECK(est.c_bar * static_cast<double>(est.samples) == doctest::Approx(exact));
}

TEST_CASE("estimate on a constant text is near zero") {
  Text t(std::string(2000, 'a'));
  SplitMix64 root(5);
  auto phi = Fingerprinter::seeded(t.size(), root.next());
  auto h = MinwiseHasher::seeded(root.next());
  auto est = estimate_size_sampling(t, 16, phi, h, 1 << 20, 0);
  CHECK(est.c_bar <= 2.0 * 16 / 2000.0 + 1e-9);
}

TEST_CASE("sampling estimate concentrates around the true size") {
  Text t = gen_random(10000, 4, 31);
  Pos tau = 16;
  SplitMix64 root(9);
  auto phi = Fingerprinter::seeded(t.size(), root.next());
  auto h = MinwiseHasher::seeded(root.next());
  auto runs = find_runs(t, tau, phi);
  SegmentList segs = segment(t, runs);

  // exact |P| for this (phi, h)
  SelectionPlan plan = make_selection_plan(segs, tau, t.size());
  std::set<Pos> all(plan.run_starts.begin(), plan.run_starts.end());
  for (auto [wlo, whi] : plan.regions) {
    auto sel = select_plain(t, wlo, whi + tau - 1, tau, phi, h);
    all.insert(sel.begin(), sel.end());
  }
  if (plan.extra_pick) all.insert(*plan.extra_pick);
  double exact = static_cast<double>(all.size());
  double per_interval = static_cast<double>(t.size()) / tau;

  int good = 0;
  for (int trial = 0; trial < 100; ++trial) {
    auto est = estimate_size_sampling(t, tau, phi, h, 512, 1000 + trial, &segs);
    if (std::abs(est.c_bar * per_interval - exact) <= per_interval) ++good;
  }
  CHECK(good >= 95);
}

TEST_CASE("whp deque counting equals naive per-window counting") {
  Text t = gen_random(10000, 4, 55);
  Pos tau = 256;
  SplitMix64 root(3);
  uint64_t s0 = root.next();
  PartitioningSet p0 = build_rand(t, 14, s0);

  auto phi = Fingerprinter::seeded(t.size(), root.next());
  auto runs = find_runs(t, tau, phi);
  SegmentList segs = segment(t, runs);
  SelectionPlan plan = make_selection_plan(segs, tau, t.size());

  for (int f = 0; f < 8; ++f) {
    auto h = MinwiseHasher::seeded(root.next());
    // naive: per window, argmins over base positions, dedup
    std::set<Pos> naive(plan.run_starts.begin(), plan.run_starts.end());
    if (plan.extra_pick) naive.insert(*plan.extra_pick);
    for (auto [wlo, whi] : plan.regions) {
      for (Pos l = wlo; l <= whi; ++l) {
        IdValue best = 0;
        bool any = false;
        auto it = std::lower_bound(p0.positions.begin(), p0.positions.end(), l);
        for (; it != p0.positions.end() && *it <= l + tau - 1; ++it) {
          IdValue v = h.eval(phi.window(t, *it, tau));
          if (!any || v < best) best = v;
          any = true;
        }
        it = std::lower_bound(p0.positions.begin(), p0.positions.end(), l);
        for (; it != p0.positions.end() && *it <= l + tau - 1; ++it)
          if (any && h.eval(phi.window(t, *it, tau)) == best) naive.insert(*it);
      }
    }
    auto [count, sb] = whp_deque_count(t, plan, p0.positions, phi, h,
                                       /*capacity=*/1 << 20, /*limit=*/1 << 30);
    REQUIRE(count == static_cast<int64_t>(naive.size()));
    CHECK(sb == 0);  // unbounded capacity never drains
  }
}

TEST_CASE("whp counting under a constant hash function counts every candidate") {
  // A degenerate h maps everything to one value, so every base position is a
  // window minimum; the count must reach the full candidate population and
  // trip the abandonment limit.
  Text t = gen_random(2000, 4, 19);
  Pos tau = 64;
  SplitMix64 root(8);
  PartitioningSet p0 = build_rand(t, 8, root.next());
  auto phi = Fingerprinter::seeded(t.size(), root.next());
  MinwiseHasher constant_h({0, 5});  // h(x) = 5 for every x
  SegmentList segs = segment(t, find_runs(t, tau, phi));
  SelectionPlan plan = make_selection_plan(segs, tau, t.size());

  std::set<Pos> expect(plan.run_starts.begin(), plan.run_starts.end());
  if (plan.extra_pick) expect.insert(*plan.extra_pick);
  for (auto [wlo, whi] : plan.regions) {
    auto it = std::lower_bound(p0.positions.begin(), p0.positions.end(), wlo);
    for (; it != p0.positions.end() && *it <= whi + tau - 1; ++it) expect.insert(*it);
  }
  auto [count, sb] = whp_deque_count(t, plan, p0.positions, phi, constant_h,
                                     /*capacity=*/1 << 20, /*limit=*/1 << 30);
  CHECK(count == static_cast<int64_t>(expect.size()));
  CHECK(sb == 0);

  int64_t limit = 8 * t.size() / tau;  // c' n / tau
  auto [count2, sb2] = whp_deque_count(t, plan, p0.positions, phi, constant_h, 1 << 20, limit);
  CHECK(count2 > limit);  // abandoned
  (void)sb2;
}

TEST_CASE("whp step-backs stay within the trials bound") {
  Text t = gen_random(10000, 4, 91);
  WhpConfig cfg;
  cfg.trials = 8;
  auto res = select_whp_large_tau(t, 256, 123, cfg);
  REQUIRE(!res.counts.empty());
  for (int64_t sb : res.step_backs) CHECK(sb <= cfg.trials);
  CHECK(!res.fell_back);
  CHECK(oracle::check_pset(t, res.pset).ok);
}

TEST_CASE("whp single-trial degenerates to direct subset selection") {
  Text t = gen_random(4000, 4, 13);
  WhpConfig cfg;
  cfg.trials = 1;
  cfg.count_limit_override = 1 << 30;
  auto res = select_whp_large_tau(t, 128, 77, cfg);
  CHECK(res.chosen == 0);
  CHECK(oracle::check_pset(t, res.pset).ok);
}

TEST_CASE("whp output passes Def.1 on structured texts") {
  for (const Text& t : {gen_periodic(8000, 3, 0), gen_thue_morse(8000)}) {
    auto res = select_whp_large_tau(t, 200, 5);
    auto rep = oracle::check_pset(t, res.pset);
    REQUIRE_MESSAGE(rep.ok, rep.first_violation);
  }
}

TEST_CASE("build_rand_whp dispatch works on both sides of the threshold") {
  Text t = gen_random(5000, 4, 21);
  auto ranks = oracle::suffix_rank_oracle(t);
  for (Pos tau : {4, 16, 300}) {
    bool fell_back = false;
    auto p = build_rand_whp(t, tau, 99, nullptr, &fell_back);
    auto rep = oracle::check_pset(t, p, &ranks);
    REQUIRE_MESSAGE(rep.ok, rep.first_violation);
  }
}

TEST_CASE("median randomized size stays within the analytic constant") {
  Text t = gen_random(10000, 4, 1234);
  Pos tau = 32;
  std::vector<int64_t> sizes;
  for (uint64_t s = 0; s < 50; ++s)
    sizes.push_back(static_cast<int64_t>(build_rand(t, tau, s).positions.size()));
  std::sort(sizes.begin(), sizes.end());
  int64_t median = sizes[sizes.size() / 2];
  CHECK(median <= 18 * t.size() / tau);
}
