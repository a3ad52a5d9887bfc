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
#include <vector>

#include "sslce/aux_meter.hpp"
#include "sslce/pset.hpp"
#include "sslce/text.hpp"

namespace sslce {

struct DetConfig {
  int64_t c_logstar = 4;  // label-list length multiplier
};

/// One reduction step of the deterministic coin tossing: psi is the index of
/// the least significant bit where the labels differ, the result is
/// 2*psi + bit(left, psi). Labels must differ.
uint64_t alphabet_reduce_step(uint64_t left_label, uint64_t right_label);

/// Iterates alphabet_reduce_step until every label is below 6. Adjacent
/// input symbols must be distinct; adjacent outputs stay distinct. The last
/// position reduces against a virtual distinct neighbor, so every input
/// position receives a label. Optionally reports the iteration count.
std::vector<uint64_t> reduce_to_six(const std::vector<uint64_t>& symbols,
                                    int* iterations = nullptr);

struct DetBlock {
  Pos start = 0;
  Pos end = 0;
  bool operator==(const DetBlock&) const = default;
};

enum class DetBlockType : int { kLong = 1, kRepeat = 2, kCoinToss = 3, kEdge = 4 };

/// Number of hierarchy levels for tau: the largest L with 12*(3/2)^L <= tau.
int64_t det_levels(Pos tau);

/// true iff len >= (3/2)^mu, evaluated exactly.
bool det_length_reaches(Pos len, int64_t mu);

/// Per-block classification of a level-(mu-1) tiling for the transition to
/// level mu.
std::vector<DetBlockType> classify(const Text& text, const std::vector<DetBlock>& blocks,
                                   int64_t mu, const DetConfig& cfg = {});

/// Level-mu blocks from level-(mu-1) blocks (array reference path).
std::vector<DetBlock> next_level(const Text& text, const std::vector<DetBlock>& blocks,
                                 int64_t mu, const DetConfig& cfg = {});

struct DetStats {
  int64_t levels = 0;
  int64_t label_list_len = 0;  // R = c * log* n (rounded even)
  AuxMeter aux;
};

/// Deterministic forward-synchronized (tau, O(tau log* n))-partitioning set,
/// built by the right-to-left streaming scheduler holding a bounded number
/// of blocks per live level.
PartitioningSet build_det(const Text& text, Pos tau, const DetConfig& cfg = {},
                          DetStats* stats = nullptr);

/// Streams the top-level blocks right to left without materializing the
/// set; the difference-cover construction consumes this twice.
void stream_det_blocks(const Text& text, Pos tau, const DetConfig& cfg,
                       const std::function<void(DetBlock)>& sink, AuxMeter* aux = nullptr);

/// Same set computed level by level with full arrays; the streaming builder
/// is equivalence-tested against this.
PartitioningSet build_det_reference(const Text& text, Pos tau, const DetConfig& cfg = {});

}  // namespace sslce
