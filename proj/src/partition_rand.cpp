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

#include "sslce/partition_rand.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "sslce/util.hpp"

namespace sslce {

namespace {

// Last position whose length-tau ID window stays inside the text.
Pos id_cap(Pos n, Pos tau) { return n - tau + 1; }

struct IdAt {
  const Text* text;
  const Fingerprinter* phi;
  const MinwiseHasher* h;
  Pos tau;

  IdValue from_scratch(Pos p) const { return h->eval(phi->window(*text, p, tau)); }
};

// Sliding scan over windows [l..l+tau-1] for l in [wlo..whi]; every position
// attaining a window minimum is reported exactly once, in increasing order.
// State is the rightmost selected position plus the current window minimum;
// losing it from the window forces an O(tau) recomputation charged to the
// next selected position.
template <typename Emit>
int64_t scan_all(const IdAt& ids, Pos wlo, Pos whi, Emit&& emit) {
  if (whi < wlo) return 0;
  const Pos tau = ids.tau;
  int64_t step_backs = 0;

  IdValue m = 0;
  Pos r = -1;        // rightmost selected position
  FpValue fp = 0;    // fingerprint of the window at the newest position seen
  Pos fp_pos = -1;

  auto cold_window = [&](Pos l) {
    fp = ids.phi->window(*ids.text, l, tau);
    fp_pos = l;
    IdValue best = ids.h->eval(fp);
    // Two passes: find the minimum, then emit every position attaining it.
    FpValue f = fp;
    for (Pos p = l + 1; p <= l + tau - 1; ++p) {
      f = ids.phi->slide(f, ids.text->sym(p - 1), ids.text->sym(p + tau - 1), tau);
      best = std::min(best, ids.h->eval(f));
    }
    f = fp;
    for (Pos p = l; p <= l + tau - 1; ++p) {
      if (p > l) f = ids.phi->slide(f, ids.text->sym(p - 1), ids.text->sym(p + tau - 1), tau);
      if (ids.h->eval(f) == best) {
        emit(p);
        r = p;
      }
    }
    fp = f;
    fp_pos = l + tau - 1;
    m = best;
  };

  cold_window(wlo);
  for (Pos l = wlo + 1; l <= whi; ++l) {
    if (r < l) {
      ++step_backs;
      cold_window(l);
      continue;
    }
    Pos k = l + tau - 1;
    while (fp_pos < k) {
      fp = ids.phi->slide(fp, ids.text->sym(fp_pos), ids.text->sym(fp_pos + tau), tau);
      ++fp_pos;
    }
    IdValue idk = ids.h->eval(fp);
    if (idk <= m) {
      m = idk;
      emit(k);
      r = k;
    }
  }
  return step_backs;
}

// Same contract as scan_all but candidates are restricted to `cand`
// (sorted positions). Keeps the candidates of the current window, with IDs,
// in a small buffer fed by one forward fingerprint pass.
template <typename Emit>
int64_t scan_subset(const IdAt& ids, Pos wlo, Pos whi, const std::vector<Pos>& cand,
                    Emit&& emit) {
  if (whi < wlo) return 0;
  const Pos tau = ids.tau;
  int64_t step_backs = 0;

  auto lo_it = std::lower_bound(cand.begin(), cand.end(), wlo);
  std::deque<std::pair<Pos, IdValue>> window_cands;

  FpValue fp = 0;
  Pos fp_pos = -1;
  auto feed_to = [&](Pos upto) {  // append candidates in (fp_pos..upto]
    if (fp_pos < 0) {
      fp = ids.phi->window(*ids.text, wlo, tau);
      fp_pos = wlo;
      if (lo_it != cand.end() && *lo_it == wlo) {
        window_cands.emplace_back(wlo, ids.h->eval(fp));
        ++lo_it;
      }
    }
    while (fp_pos < upto) {
      fp = ids.phi->slide(fp, ids.text->sym(fp_pos), ids.text->sym(fp_pos + tau), tau);
      ++fp_pos;
      if (lo_it != cand.end() && *lo_it == fp_pos) {
        window_cands.emplace_back(fp_pos, ids.h->eval(fp));
        ++lo_it;
      }
    }
  };

  IdValue m = 0;
  Pos r = -1;
  bool have_min = false;
  for (Pos l = wlo; l <= whi; ++l) {
    feed_to(l + tau - 1);
    while (!window_cands.empty() && window_cands.front().first < l) window_cands.pop_front();
    if (window_cands.empty()) {
      have_min = false;
      continue;  // no candidate in this window
    }
    if (!have_min || r < l) {
      if (have_min) ++step_backs;
      m = window_cands.front().second;
      for (const auto& [p, id] : window_cands) m = std::min(m, id);
      for (const auto& [p, id] : window_cands)
        if (id == m && p > r) {
          emit(p);
          r = p;
        }
      have_min = true;
      continue;
    }
    const auto& [kp, kid] = window_cands.back();
    if (kp == l + tau - 1 && kid <= m) {
      m = kid;
      emit(kp);
      r = kp;
    }
  }
  return step_backs;
}

}  // namespace

SelectionPlan make_selection_plan(const SegmentList& segs, Pos tau, Pos n) {
  SelectionPlan plan;
  plan.tau = tau;
  const Pos cap = id_cap(n, tau);

  auto add_region = [&](Pos wlo, Pos whi) {
    whi = std::min(whi, cap - tau + 1);
    wlo = std::max<Pos>(wlo, 1);
    if (whi >= wlo) plan.regions.emplace_back(wlo, whi);
  };

  for (size_t i = 0; i < segs.size(); ++i) {
    const Segment& sg = segs[i];
    if (sg.is_run()) {
      plan.run_starts.push_back(sg.start);
      continue;
    }
    if (i == 0) {
      // Leading plain segment: scanned only when a full window fits.
      if (sg.end - sg.start + 1 >= tau) add_region(sg.start, sg.end - tau + 1);
      continue;
    }
    // Plain segment after a run: scan from the run's last tau positions
    // through the segment. The final margin follows the edge rule.
    Pos qe = segs[i - 1].end;
    if (i + 1 == segs.size() && qe >= n - tau + 1 && qe <= n - 1) {
      plan.extra_pick = qe + 1;
      continue;
    }
    add_region(qe - tau + 1, sg.end - tau + 1);
  }
  return plan;
}

std::vector<Pos> select_plain(const Text& text, Pos seg_start, Pos seg_end, Pos tau,
                              const Fingerprinter& phi, const MinwiseHasher& h) {
  std::vector<Pos> out;
  if (seg_end - seg_start + 1 < tau) return out;
  Pos whi = std::min(seg_end, id_cap(text.size(), tau)) - tau + 1;
  IdAt ids{&text, &phi, &h, tau};
  scan_all(ids, seg_start, whi, [&](Pos p) { out.push_back(p); });
  return out;
}

namespace {

struct SeedBundle {
  Fingerprinter phi;
  Fingerprinter psi;  // runs detection
  MinwiseHasher h;
};

SeedBundle make_bundle(Pos n, uint64_t seed) {
  SplitMix64 root(seed);
  uint64_t s_phi = root.next(), s_psi = root.next(), s_h = root.next();
  return SeedBundle{Fingerprinter::seeded(n, s_phi), Fingerprinter::seeded(n, s_psi),
                    MinwiseHasher::seeded(s_h)};
}

std::vector<Pos> collect_plan(const SelectionPlan& plan, const IdAt& ids,
                              int64_t* step_backs) {
  std::vector<Pos> p = plan.run_starts;
  for (auto [wlo, whi] : plan.regions) {
    int64_t sb = scan_all(ids, wlo, whi, [&](Pos pos) { p.push_back(pos); });
    if (step_backs) *step_backs += sb;
  }
  if (plan.extra_pick) p.push_back(*plan.extra_pick);
  std::sort(p.begin(), p.end());
  p.erase(std::unique(p.begin(), p.end()), p.end());
  return p;
}

}  // namespace

PartitioningSet build_rand(const Text& text, Pos tau, uint64_t seed, RandStats* stats) {
  Pos n = text.size();
  if (tau < 1 || tau > n) throw std::invalid_argument("build_rand: tau must be in [1..n]");
  SeedBundle b = make_bundle(n, seed);

  std::vector<Run> runs;
  if (tau >= 6) runs = find_runs(text, tau, b.psi);
  SegmentList segs = segment(text, runs);
  SelectionPlan plan = make_selection_plan(segs, tau, n);

  IdAt ids{&text, &b.phi, &b.h, tau};
  int64_t sb = 0;
  PartitioningSet pset;
  pset.positions = collect_plan(plan, ids, &sb);
  pset.tau = 2 * tau;
  pset.delta = 2 * tau;
  pset.forward_sync = true;
  fill_block_periods(text, pset);

  if (stats) {
    stats->step_backs += sb;
    stats->runs_found += static_cast<int64_t>(runs.size());
    stats->aux.note(static_cast<int64_t>(pset.positions.size() + 2 * runs.size()) + 8);
  }
  return pset;
}

SizeEstimate estimate_size_sampling(const Text& text, Pos tau, const Fingerprinter& phi,
                                    const MinwiseHasher& h, int64_t m, uint64_t sample_seed,
                                    const SegmentList* segments) {
  Pos n = text.size();
  if (tau < 1 || m < 1) throw std::invalid_argument("estimate_size_sampling: tau, m >= 1");
  SegmentList local;
  if (!segments) {
    std::vector<Run> runs;
    if (tau >= 6) runs = find_runs(text, tau, phi);
    local = segment(text, runs);
    segments = &local;
  }
  SelectionPlan plan = make_selection_plan(*segments, tau, n);
  IdAt ids{&text, &phi, &h, tau};

  auto is_run_start = [&](Pos p) {
    return std::binary_search(plan.run_starts.begin(), plan.run_starts.end(), p);
  };
  auto count_interval = [&](Pos a, Pos b) {
    int64_t c = 0;
    for (Pos q : plan.run_starts)
      if (q >= a && q <= b) ++c;
    if (plan.extra_pick && *plan.extra_pick >= a && *plan.extra_pick <= b) ++c;
    for (auto [rlo, rhi] : plan.regions) {
      Pos wlo = std::max(rlo, a - tau + 1), whi = std::min(rhi, b);
      if (whi < wlo) continue;
      scan_all(ids, wlo, whi, [&](Pos p) {
        if (p >= a && p <= b && !is_run_start(p)) ++c;
      });
    }
    return c;
  };

  int64_t intervals = n / tau;
  SizeEstimate est;
  if (intervals == 0) return est;
  int64_t total = 0;
  if (m >= intervals) {
    for (int64_t i = 0; i < intervals; ++i) total += count_interval(i * tau + 1, (i + 1) * tau);
    est.samples = intervals;
    est.census = true;
  } else {
    SplitMix64 rng(sample_seed);
    for (int64_t k = 0; k < m; ++k) {
      int64_t i = static_cast<int64_t>(rng.next_below(static_cast<uint64_t>(intervals)));
      total += count_interval(i * tau + 1, (i + 1) * tau);
    }
    est.samples = m;
  }
  est.c_bar = static_cast<double>(total) / static_cast<double>(est.samples);
  return est;
}

std::pair<int64_t, int64_t> whp_deque_count(const Text& text, const SelectionPlan& plan,
                                            const std::vector<Pos>& base_positions,
                                            const Fingerprinter& phi, const MinwiseHasher& h,
                                            int64_t deque_capacity, int64_t limit) {
  const Pos tau = plan.tau;
  int64_t count = static_cast<int64_t>(plan.run_starts.size()) + (plan.extra_pick ? 1 : 0);
  int64_t step_backs = 0;

  // Monotone deque of future candidates (position, ID), nondecreasing in
  // both; capacity-bounded, so a drained deque forces an O(tau) refill.
  std::deque<std::pair<Pos, IdValue>> d;
  Pos q_last = 0;

  auto insert = [&](Pos p, IdValue id) {
    while (!d.empty() && d.back().second > id) d.pop_back();
    if (static_cast<int64_t>(d.size()) < deque_capacity) d.emplace_back(p, id);
    // else: full with no weaker entries to displace; the candidate is
    // dropped and a later refill recovers whatever still matters.
  };

  auto refill = [&](Pos l) {
    d.clear();
    auto it = std::lower_bound(base_positions.begin(), base_positions.end(), l);
    FpValue fp = 0;
    Pos fp_pos = -1;
    for (; it != base_positions.end() && *it <= l + tau - 1; ++it) {
      if (fp_pos < 0) {
        fp = phi.window(text, *it, tau);
      } else {
        for (Pos p = fp_pos; p < *it; ++p)
          fp = phi.slide(fp, text.sym(p), text.sym(p + tau), tau);
      }
      fp_pos = *it;
      insert(*it, h.eval(fp));
    }
  };

  auto count_front_ties = [&]() {
    // Every deque entry tying the front is a minimum of the current window.
    // Run starts were counted up front, so skip them here.
    for (const auto& [p, id] : d) {
      if (id != d.front().second) break;
      if (p > q_last) {
        if (!std::binary_search(plan.run_starts.begin(), plan.run_starts.end(), p)) ++count;
        q_last = p;
      }
    }
  };

  for (auto [rlo, rhi] : plan.regions) {
    refill(rlo);
    q_last = 0;
    if (!d.empty()) count_front_ties();
    auto it = std::lower_bound(base_positions.begin(), base_positions.end(), rlo + tau);
    FpValue fp = 0;
    Pos fp_pos = -1;
    for (Pos l = rlo + 1; l <= rhi; ++l) {
      if (count > limit) return {count, step_backs};
      while (!d.empty() && d.front().first < l) d.pop_front();
      Pos k = l + tau - 1;
      bool k_is_cand = it != base_positions.end() && *it == k;
      if (!d.empty()) {
        if (k_is_cand) {
          if (fp_pos < 0)
            fp = phi.window(text, k, tau);
          else
            for (Pos p = fp_pos; p < k; ++p)
              fp = phi.slide(fp, text.sym(p), text.sym(p + tau), tau);
          fp_pos = k;
          insert(k, h.eval(fp));
          ++it;
        }
      } else {
        ++step_backs;
        refill(l);
        it = std::lower_bound(base_positions.begin(), base_positions.end(), l + tau);
        fp_pos = -1;
      }
      if (!d.empty()) count_front_ties();
    }
  }
  return {count, step_backs};
}

WhpResult select_whp_large_tau(const Text& text, Pos tau, uint64_t seed, const WhpConfig& cfg) {
  Pos n = text.size();
  if (tau < 2 || tau > n) throw std::invalid_argument("select_whp_large_tau: tau in [2..n]");
  Pos base = cfg.base_width;
  if (base == 0) base = std::max<Pos>(4, std::min<Pos>(std::bit_width(static_cast<uint64_t>(std::max<Pos>(n - 1, 1))), tau / 2));
  if (tau <= base) throw std::invalid_argument("select_whp_large_tau: tau must exceed base_width");
  int64_t trials = cfg.trials > 0 ? cfg.trials
                                  : std::max<int64_t>(1, std::bit_width(static_cast<uint64_t>(std::max<Pos>(n - 1, 1))));

  WhpResult res;
  SplitMix64 root(seed);
  uint64_t s_base = root.next();

  // Coarse (2b,2b) set; candidates for every trial come from it.
  PartitioningSet p0 = build_rand(text, base, s_base);

  SeedBundle b = make_bundle(n, root.next());
  std::vector<Run> runs;
  if (tau >= 6) runs = find_runs(text, tau, b.psi);
  SegmentList segs = segment(text, runs);
  SelectionPlan plan = make_selection_plan(segs, tau, n);

  int64_t limit = cfg.count_limit_override > 0 ? cfg.count_limit_override
                                               : std::max<int64_t>(1, cfg.cprime * n / tau);
  res.deque_capacity = std::max<int64_t>(2, ceil_div(cfg.cprime * n, tau * trials));

  std::vector<uint64_t> trial_seeds(static_cast<size_t>(trials));
  for (auto& s : trial_seeds) s = root.next();

  for (int64_t i = 0; i < trials; ++i) {
    MinwiseHasher hi = MinwiseHasher::seeded(trial_seeds[static_cast<size_t>(i)]);
    auto [count, sb] = whp_deque_count(text, plan, p0.positions, b.phi, hi,
                                       res.deque_capacity, limit);
    res.counts.push_back(count);
    res.step_backs.push_back(sb);
    if (res.chosen < 0 && count <= limit) res.chosen = i;
  }

  if (res.chosen >= 0) {
    MinwiseHasher hi = MinwiseHasher::seeded(trial_seeds[static_cast<size_t>(res.chosen)]);
    IdAt ids{&text, &b.phi, &hi, tau};
    std::vector<Pos> p = plan.run_starts;
    for (auto [wlo, whi] : plan.regions)
      scan_subset(ids, wlo, whi, p0.positions, [&](Pos pos) { p.push_back(pos); });
    if (plan.extra_pick) p.push_back(*plan.extra_pick);
    std::sort(p.begin(), p.end());
    p.erase(std::unique(p.begin(), p.end()), p.end());

    PartitioningSet pset;
    pset.positions = std::move(p);
    pset.tau = 2 * tau;
    pset.delta = 2 * tau;
    pset.forward_sync = true;
    try {
      fill_block_periods(text, pset);
      res.pset = std::move(pset);
      return res;
    } catch (const std::logic_error&) {
      // Candidate starvation in some window (possible when tau is barely
      // above base_width); fall through to the expected-time path.
    }
  }
  res.fell_back = true;
  res.chosen = -1;
  res.pset = build_rand(text, tau, root.next());
  return res;
}

PartitioningSet build_rand_whp(const Text& text, Pos tau, uint64_t seed, RandStats* stats,
                               bool* fell_back) {
  Pos n = text.size();
  if (tau < 1 || tau > n) throw std::invalid_argument("build_rand_whp: tau must be in [1..n]");
  if (fell_back) *fell_back = false;
  int64_t lg = std::bit_width(static_cast<uint64_t>(std::max<Pos>(n - 1, 1)));
  if (tau >= lg * lg && tau >= 8) {
    WhpResult r = select_whp_large_tau(text, tau, seed);
    if (fell_back) *fell_back = r.fell_back;
    if (stats) stats->aux.note(static_cast<int64_t>(r.pset.positions.size()) + r.deque_capacity);
    return r.pset;
  }

  // Small tau: size estimation by interval sampling picks a hash function
  // before committing to a full scan.
  SplitMix64 root(seed);
  SeedBundle b = make_bundle(n, root.next());
  std::vector<Run> runs;
  if (tau >= 6) runs = find_runs(text, tau, b.psi);
  SegmentList segs = segment(text, runs);
  SelectionPlan plan = make_selection_plan(segs, tau, n);

  int64_t intervals = std::max<int64_t>(1, n / tau);
  int64_t lg5 = lg * lg * lg * lg * lg;
  int64_t m = std::min<int64_t>(intervals, std::min<int64_t>(lg5, 1000000));
  int64_t retries = 2 * lg;
  double accept = 9.0;  // c' + 1 for the default abandonment constant

  for (int64_t t = 0; t < retries; ++t) {
    uint64_t hs = root.next();
    MinwiseHasher h = MinwiseHasher::seeded(hs);
    SizeEstimate est = estimate_size_sampling(text, tau, b.phi, h, m, root.next(), &segs);
    if (est.c_bar > accept) continue;
    IdAt ids{&text, &b.phi, &h, tau};
    int64_t sb = 0;
    PartitioningSet pset;
    pset.positions = collect_plan(plan, ids, &sb);
    if (static_cast<int64_t>(pset.positions.size()) > (static_cast<int64_t>(accept) + 1) * intervals &&
        t + 1 < retries)
      continue;  // estimate lied; try another function
    pset.tau = 2 * tau;
    pset.delta = 2 * tau;
    pset.forward_sync = true;
    fill_block_periods(text, pset);
    if (stats) {
      stats->step_backs += sb;
      stats->runs_found += static_cast<int64_t>(runs.size());
      stats->aux.note(static_cast<int64_t>(pset.positions.size() + 2 * runs.size()) + 8);
    }
    return pset;
  }
  if (fell_back) *fell_back = true;
  return build_rand(text, tau, root.next(), stats);
}

}  // namespace sslce
