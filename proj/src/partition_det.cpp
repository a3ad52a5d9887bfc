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

#include "sslce/partition_det.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <functional>
#include <memory>
#include <stdexcept>

#include "sslce/util.hpp"

namespace sslce {

namespace {

constexpr int kCharBits = 9;  // text symbols fit in [0..257)

__int128 pow3(int64_t mu) {
  __int128 v = 1;
  for (int64_t i = 0; i < mu; ++i) v *= 3;
  return v;
}

}  // namespace

bool det_length_reaches(Pos len, int64_t mu) {
  if (mu <= 0) return len >= 1;
  if (mu > 78) return false;  // threshold beyond any realistic text
  return (static_cast<__int128>(len) << mu) >= pow3(mu);
}

int64_t det_levels(Pos tau) {
  int64_t level = 0;
  while (level + 1 <= 78 &&
         static_cast<__int128>(12) * pow3(level + 1) <= (static_cast<__int128>(tau) << (level + 1)))
    ++level;
  return level;
}

uint64_t alphabet_reduce_step(uint64_t left_label, uint64_t right_label) {
  if (left_label == right_label)
    throw std::invalid_argument("alphabet_reduce_step: labels must differ");
  int psi = std::countr_zero(left_label ^ right_label);
  return 2 * static_cast<uint64_t>(psi) + ((left_label >> psi) & 1);
}

std::vector<uint64_t> reduce_to_six(const std::vector<uint64_t>& symbols, int* iterations) {
  for (size_t i = 0; i + 1 < symbols.size(); ++i)
    if (symbols[i] == symbols[i + 1])
      throw std::invalid_argument("reduce_to_six: adjacent symbols must differ");
  std::vector<uint64_t> cur = symbols;
  int iters = 0;
  auto needs_work = [&] {
    return std::any_of(cur.begin(), cur.end(), [](uint64_t v) { return v >= 6; });
  };
  while (!cur.empty() && needs_work()) {
    std::vector<uint64_t> next(cur.size());
    for (size_t i = 0; i + 1 < cur.size(); ++i)
      next[i] = alphabet_reduce_step(cur[i], cur[i + 1]);
    // The last position reduces against a virtual neighbor (own value + 1):
    // the differing bit is its lowest zero bit, keeping neighbors distinct.
    next.back() = alphabet_reduce_step(cur.back(), cur.back() + 1);
    cur = std::move(next);
    ++iters;
  }
  if (iterations) *iterations = iters;
  return cur;
}

namespace {

struct BInfo {
  Pos start = 0, end = 0;
  uint64_t digest = 0;
  bool type1 = false;
  bool eq_right = false;
  bool eq_left = false;
  int32_t llen = 0;
  std::vector<uint64_t> labels;  // labels[j-1] = lab(block, j)

  Pos len() const { return end - start + 1; }
  bool inseq() const { return !type1 && !eq_right && !eq_left; }
};

uint64_t block_digest(const Text& text, Pos start, Pos end) {
  uint64_t d = 0;
  Pos take = std::min<Pos>(end - start + 1, 7);
  for (Pos k = 0; k < take; ++k)
    d |= static_cast<uint64_t>(text.sym(start + k)) << (kCharBits * k);
  return d;
}

bool blocks_equal(const Text& text, const BInfo& a, const BInfo& b) {
  return a.len() == b.len() && a.digest == b.digest && text.range_equal(a.start, b.start, a.len());
}

// First reduction label from the blocks-as-numbers alphabet: the blocks are
// zero-padded to the left, so the walk is tail-aligned.
uint64_t first_label(const Text& text, const BInfo& cur, const BInfo& right) {
  for (Pos t = 0;; ++t) {
    Sym ca = t < cur.len() ? text.sym(cur.end - t) : 0;
    Sym cb = t < right.len() ? text.sym(right.end - t) : 0;
    if (ca != cb) {
      int low = std::countr_zero(static_cast<uint32_t>(ca ^ cb));
      uint64_t psi = static_cast<uint64_t>(kCharBits) * static_cast<uint64_t>(t) +
                     static_cast<uint64_t>(low);
      return 2 * psi + ((static_cast<uint32_t>(ca) >> low) & 1);
    }
    if (t > cur.len() && t > right.len())
      throw std::logic_error("first_label: blocks compare equal");
  }
}

// Virtual right neighbor for the rightmost block of the text: compare the
// block's number with itself + 1, i.e. the lowest zero bit of its last
// character.
uint64_t virtual_label(const Text& text, const BInfo& cur) {
  uint32_t c = static_cast<uint32_t>(text.sym(cur.end));
  int psi = std::countr_one(c);
  return 2 * static_cast<uint64_t>(psi);
}

void compute_chain(const Text& text, BInfo& cur, const BInfo* right, int64_t R) {
  if (cur.type1 || cur.eq_right) {
    cur.llen = 0;
    return;
  }
  if (!right) {
    cur.llen = 1;
    cur.labels = {virtual_label(text, cur)};
    return;
  }
  cur.llen = static_cast<int32_t>(std::min<int64_t>(right->llen + 1, R));
  cur.labels.resize(static_cast<size_t>(cur.llen));
  cur.labels[0] = first_label(text, cur, *right);
  for (int32_t j = 2; j <= cur.llen; ++j)
    cur.labels[static_cast<size_t>(j - 1)] = alphabet_reduce_step(
        cur.labels[static_cast<size_t>(j - 2)], right->labels[static_cast<size_t>(j - 2)]);
}

// Is this block the left endpoint of a level-mu block? l2/l1 are the blocks
// to its left (later arrivals in the right-to-left stream), r1 to its right.
bool boundary_decision(const BInfo* l2, const BInfo* l1, const BInfo& cur, const BInfo* r1,
                       int64_t R) {
  if (cur.type1) return true;
  if (cur.eq_left || cur.eq_right) return !cur.eq_left;  // repeat: leftmost wins
  if (!l1 || !l1->inseq()) return true;                  // first of its sequence
  if (!l2 || !l2->inseq()) return false;                 // second: minima suppressed
  if (r1 && r1->llen == static_cast<int32_t>(R)) {
    // Labeled region: final labels exist here and on both neighbors.
    uint64_t lc = cur.labels[static_cast<size_t>(R - 1)];
    uint64_t ll = l1->labels[static_cast<size_t>(R - 1)];
    uint64_t lr = r1->labels[static_cast<size_t>(R - 1)];
    return lc < ll && lc < lr;
  }
  // Margin of a long sequence or a short (type-4) sequence: pair from the
  // right; blocks at even distance from the sequence end open a pair.
  return cur.llen % 2 == 0;
}

int64_t label_list_cap(Pos n, const DetConfig& cfg) {
  int64_t R = cfg.c_logstar * log_star2(static_cast<uint64_t>(std::max<Pos>(n, 2)));
  R = std::max<int64_t>(R, 6);
  if (R & 1) ++R;  // the margin pairing assumes an even cap
  return R;
}

std::vector<BInfo> build_infos(const Text& text, const std::vector<DetBlock>& blocks,
                               int64_t mu, int64_t R) {
  size_t m = blocks.size();
  std::vector<BInfo> infos(m);
  for (size_t i = 0; i < m; ++i) {
    infos[i].start = blocks[i].start;
    infos[i].end = blocks[i].end;
    infos[i].digest = block_digest(text, blocks[i].start, blocks[i].end);
    infos[i].type1 = det_length_reaches(infos[i].len(), mu);
  }
  for (size_t i = 0; i + 1 < m; ++i) {
    infos[i].eq_right = blocks_equal(text, infos[i], infos[i + 1]);
    infos[i + 1].eq_left = infos[i].eq_right;
  }
  for (size_t i = m; i-- > 0;)
    compute_chain(text, infos[i], i + 1 < m ? &infos[i + 1] : nullptr, R);
  return infos;
}

}  // namespace

std::vector<DetBlockType> classify(const Text& text, const std::vector<DetBlock>& blocks,
                                   int64_t mu, const DetConfig& cfg) {
  int64_t R = label_list_cap(text.size(), cfg);
  auto infos = build_infos(text, blocks, mu, R);
  size_t m = infos.size();
  std::vector<DetBlockType> types(m);
  size_t i = 0;
  while (i < m) {
    if (infos[i].type1) {
      types[i] = DetBlockType::kLong;
      ++i;
      continue;
    }
    if (!infos[i].inseq()) {
      types[i] = DetBlockType::kRepeat;
      ++i;
      continue;
    }
    size_t j = i;
    while (j < m && infos[j].inseq()) ++j;
    DetBlockType t = (j - i) >= static_cast<size_t>(R) ? DetBlockType::kCoinToss
                                                       : DetBlockType::kEdge;
    for (size_t k = i; k < j; ++k) types[k] = t;
    i = j;
  }
  return types;
}

std::vector<DetBlock> next_level(const Text& text, const std::vector<DetBlock>& blocks,
                                 int64_t mu, const DetConfig& cfg) {
  if (blocks.empty()) return {};
  int64_t R = label_list_cap(text.size(), cfg);
  auto infos = build_infos(text, blocks, mu, R);
  size_t m = infos.size();
  std::vector<DetBlock> out;
  Pos open_end = infos.back().end;
  for (size_t i = m; i-- > 0;) {
    const BInfo* l1 = i >= 1 ? &infos[i - 1] : nullptr;
    const BInfo* l2 = i >= 2 ? &infos[i - 2] : nullptr;
    const BInfo* r1 = i + 1 < m ? &infos[i + 1] : nullptr;
    if (boundary_decision(l2, l1, infos[i], r1, R)) {
      out.push_back({infos[i].start, open_end});
      open_end = infos[i].start - 1;
    }
  }
  std::reverse(out.begin(), out.end());
  return out;
}

namespace {

// Right-to-left streaming transition from level mu-1 to mu. Keeps at most
// four undecided blocks plus the last decided one; emits level-mu blocks in
// arrival (right-to-left) order.
class LevelTransducer {
 public:
  LevelTransducer(const Text& text, int64_t mu, int64_t R, AuxMeter* aux)
      : text_(text), mu_(mu), R_(R), aux_(aux) {}

  void set_sink(std::function<void(DetBlock)> sink) { sink_ = std::move(sink); }

  void push(DetBlock b) {
    BInfo cur;
    cur.start = b.start;
    cur.end = b.end;
    cur.digest = block_digest(text_, b.start, b.end);
    cur.type1 = det_length_reaches(cur.end - cur.start + 1, mu_);
    if (open_end_ < 0) open_end_ = cur.end;
    BInfo* right = pending_.empty() ? nullptr : &pending_.front();
    if (right) {
      cur.eq_right = blocks_equal(text_, cur, *right);
      right->eq_left = cur.eq_right;
    }
    compute_chain(text_, cur, has_decided_ && !right ? &last_decided_ : right, R_);
    meter(static_cast<int64_t>(cur.labels.size()) + 8);
    pending_.push_front(std::move(cur));
    if (pending_.size() >= 4) decide_back();
  }

  void flush() {
    while (!pending_.empty()) decide_back();
  }

 private:
  void meter(int64_t words) {
    if (aux_) aux_->acquire(words);
  }
  void unmeter(int64_t words) {
    if (aux_) aux_->release(words);
  }

  void decide_back() {
    size_t s = pending_.size();
    const BInfo& cur = pending_.back();
    const BInfo* l1 = s >= 2 ? &pending_[s - 2] : nullptr;
    const BInfo* l2 = s >= 3 ? &pending_[s - 3] : nullptr;
    const BInfo* r1 = has_decided_ ? &last_decided_ : nullptr;
    if (boundary_decision(l2, l1, cur, r1, R_)) {
      sink_({cur.start, open_end_});
      open_end_ = cur.start - 1;
    }
    if (has_decided_) unmeter(static_cast<int64_t>(last_decided_.labels.size()) + 8);
    last_decided_ = std::move(pending_.back());
    has_decided_ = true;
    pending_.pop_back();
  }

  const Text& text_;
  int64_t mu_;
  int64_t R_;
  AuxMeter* aux_;
  std::function<void(DetBlock)> sink_;
  std::deque<BInfo> pending_;
  BInfo last_decided_;
  bool has_decided_ = false;
  Pos open_end_ = -1;
};

}  // namespace

void stream_det_blocks(const Text& text, Pos tau, const DetConfig& cfg,
                       const std::function<void(DetBlock)>& sink, AuxMeter* aux) {
  Pos n = text.size();
  if (tau < 1 || tau > n) throw std::invalid_argument("stream_det_blocks: tau in [1..n]");
  int64_t L = det_levels(tau);
  AuxMeter local;
  if (!aux) aux = &local;
  if (L == 0) {
    for (Pos i = n; i >= 1; --i) sink({i, i});
    return;
  }
  int64_t R = label_list_cap(n, cfg);
  std::vector<std::unique_ptr<LevelTransducer>> levels;
  levels.reserve(static_cast<size_t>(L));
  for (int64_t mu = 1; mu <= L; ++mu)
    levels.push_back(std::make_unique<LevelTransducer>(text, mu, R, aux));
  for (int64_t mu = 0; mu + 1 < L; ++mu) {
    LevelTransducer* next = levels[static_cast<size_t>(mu + 1)].get();
    levels[static_cast<size_t>(mu)]->set_sink([next](DetBlock b) { next->push(b); });
  }
  levels.back()->set_sink(sink);
  for (Pos i = n; i >= 1; --i) levels.front()->push({i, i});
  for (auto& lt : levels) lt->flush();
}

PartitioningSet build_det(const Text& text, Pos tau, const DetConfig& cfg, DetStats* stats) {
  Pos n = text.size();
  if (tau < 1 || tau > n) throw std::invalid_argument("build_det: tau must be in [1..n]");
  int64_t L = det_levels(tau);
  int64_t R = label_list_cap(n, cfg);
  int64_t ls = log_star2(static_cast<uint64_t>(std::max<Pos>(n, 2)));

  PartitioningSet pset;
  pset.tau = tau;
  pset.delta = std::max<Pos>(tau, ceil_div(cfg.c_logstar * tau * ls, 2));
  pset.forward_sync = true;

  AuxMeter local_aux;
  AuxMeter* aux = stats ? &stats->aux : &local_aux;
  std::vector<Pos> starts_rl;
  stream_det_blocks(text, tau, cfg,
                    [&](DetBlock b) {
                      starts_rl.push_back(b.start);
                      aux->acquire(1);
                    },
                    aux);
  pset.positions.assign(starts_rl.rbegin(), starts_rl.rend());

  fill_block_periods(text, pset);
  if (stats) {
    stats->levels = L;
    stats->label_list_len = R;
  }
  return pset;
}

PartitioningSet build_det_reference(const Text& text, Pos tau, const DetConfig& cfg) {
  Pos n = text.size();
  if (tau < 1 || tau > n) throw std::invalid_argument("build_det_reference: tau in [1..n]");
  int64_t L = det_levels(tau);
  int64_t ls = log_star2(static_cast<uint64_t>(std::max<Pos>(n, 2)));

  std::vector<DetBlock> blocks(static_cast<size_t>(n));
  for (Pos i = 1; i <= n; ++i) blocks[static_cast<size_t>(i - 1)] = {i, i};
  for (int64_t mu = 1; mu <= L; ++mu) blocks = next_level(text, blocks, mu, cfg);

  PartitioningSet pset;
  pset.tau = tau;
  pset.delta = std::max<Pos>(tau, ceil_div(cfg.c_logstar * tau * ls, 2));
  pset.forward_sync = true;
  pset.positions.reserve(blocks.size());
  for (const auto& b : blocks) pset.positions.push_back(b.start);
  fill_block_periods(text, pset);
  return pset;
}

}  // namespace sslce
