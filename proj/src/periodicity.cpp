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

#include "sslce/periodicity.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sslce {

namespace {

// Border array period: |s| - longest proper border.
template <typename At>
Pos border_period(At at, Pos len) {
  std::vector<Pos> border(static_cast<size_t>(len) + 1, 0);
  Pos k = 0;
  for (Pos i = 1; i < len; ++i) {
    while (k > 0 && at(i) != at(k)) k = border[static_cast<size_t>(k)];
    if (at(i) == at(k)) ++k;
    border[static_cast<size_t>(i) + 1] = k;
  }
  return len - border[static_cast<size_t>(len)];
}

}  // namespace

Pos principal_period(const Text& s, Pos start, Pos end) {
  Pos len = end - start + 1;
  if (len < 1) throw std::invalid_argument("principal_period: empty string");
  return border_period([&](Pos i) { return s.sym(start + i); }, len);
}

Pos principal_period(const std::vector<Sym>& s) {
  if (s.empty()) throw std::invalid_argument("principal_period: empty string");
  return border_period([&](Pos i) { return s[static_cast<size_t>(i)]; },
                       static_cast<Pos>(s.size()));
}

std::optional<Pos> fine_wilf_reduce(Pos len, Pos p, Pos q) {
  Pos g = std::gcd(p, q);
  if (len >= p + q - g) return g;
  return std::nullopt;
}

namespace {

// Extends the maximal region around [lo..hi] that keeps period rho.
// Precondition: S[x] == S[x-rho] for all x in [lo+rho..hi].
std::pair<Pos, Pos> extend_periodic(const Text& s, Pos lo, Pos hi, Pos rho) {
  Pos n = s.size();
  while (lo > 1 && s.sym(lo - 1) == s.sym(lo - 1 + rho)) --lo;
  while (hi < n && s.sym(hi + 1) == s.sym(hi + 1 - rho)) ++hi;
  return {lo, hi};
}

}  // namespace

std::vector<Run> find_runs(const Text& text, Pos tau, const Fingerprinter& psi) {
  if (tau < 6) throw std::invalid_argument("find_runs: tau must be >= 6");
  Pos n = text.size();
  std::vector<Run> runs;
  if (n < tau) return runs;

  const Pos half = tau / 2;
  const Pos scan = tau / 3;   // candidate scan length within each interval
  const Pos w = tau / 6;      // fingerprint window length

  Run last{0, 0, 0};
  for (Pos alpha = 0; (alpha + 1) * half <= n; ++alpha) {
    Pos lo = alpha * half + 1;
    Pos hi = lo + half - 1;
    if (last.start != 0 && lo >= last.start && hi <= last.end) continue;

    // Scan the first tau/3 fingerprints of the interval, tracking the
    // minimum value and the smallest distance between repeats of it.
    FpValue fp = psi.window(text, lo, w);
    FpValue best = fp;
    Pos best_first = lo, best_last = lo, best_gap = 0;
    for (Pos l = lo + 1; l < lo + scan; ++l) {
      fp = psi.slide(fp, text.sym(l - 1), text.sym(l + w - 1), w);
      if (fp < best) {
        best = fp;
        best_first = best_last = l;
        best_gap = 0;
      } else if (fp == best) {
        Pos gap = l - best_last;
        best_gap = best_gap == 0 ? gap : std::min(best_gap, gap);
        best_last = l;
      }
    }
    if (best_gap == 0 || best_gap > w) continue;  // min never repeated close enough

    // The fingerprint only hints. Verify the suspected period by direct
    // character comparison, then extend to the maximal periodic region.
    Pos rho = best_gap;
    if (!text.range_equal(best_first, best_first + rho, w)) continue;
    auto [rlo, rhi] = extend_periodic(text, best_first, best_first + rho + w - 1, rho);
    if (rhi - rlo + 1 < tau) continue;

    Pos principal = principal_period(text, rlo, rhi);
    if (principal != rho) {
      // Maximal region for the principal period; it contains [rlo..rhi].
      auto ext = extend_periodic(text, rlo, rhi, principal);
      rlo = ext.first;
      rhi = ext.second;
    }
    if (principal > w || rhi - rlo + 1 < tau) continue;

    Run r{rlo, rhi, principal};
    if (!(r == last)) runs.push_back(r);
    last = r;
  }

  std::sort(runs.begin(), runs.end(),
            [](const Run& a, const Run& b) { return a.start < b.start; });
  runs.erase(std::unique(runs.begin(), runs.end()), runs.end());
  return runs;
}

std::vector<Run> find_runs(const Text& text, Pos tau, uint64_t seed) {
  Fingerprinter psi = Fingerprinter::seeded(text.size(), seed);
  return find_runs(text, tau, psi);
}

SegmentList segment(const Text& text, const std::vector<Run>& runs) {
  Pos n = text.size();
  SegmentList out;
  if (n == 0) return out;
  if (runs.empty()) {
    out.push_back({1, n, 0});
    return out;
  }

  // Right-to-left: a run keeps its full extent unless a previously stored
  // (righter) run already owns part of its right margin.
  std::vector<Segment> stored;
  Pos bound = n + 1;  // start of the leftmost stored run
  for (auto it = runs.rbegin(); it != runs.rend(); ++it) {
    Pos end = std::min(it->end, bound - 1);
    if (end < it->start)
      throw std::invalid_argument("segment: run swallowed by overlap, invalid run list");
    stored.push_back({it->start, end, it->period});
    bound = it->start;
  }
  std::reverse(stored.begin(), stored.end());

  Pos cursor = 1;
  for (const auto& seg : stored) {
    if (seg.start < cursor)
      throw std::invalid_argument("segment: overlapping runs beyond margin rules");
    if (seg.start > cursor) out.push_back({cursor, seg.start - 1, 0});
    out.push_back(seg);
    cursor = seg.end + 1;
  }
  if (cursor <= n) out.push_back({cursor, n, 0});
  return out;
}

}  // namespace sslce
