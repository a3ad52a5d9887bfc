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

#include <string>
#include <vector>

#include "sslce/lce_index.hpp"
#include "sslce/pset.hpp"
#include "sslce/text.hpp"

namespace sslce {

/// First position after p + rho where the period rho breaks; n+1 when the
/// period survives to the text end (the sentinel always breaks it).
Pos right_violation(const Text& text, Pos p, Pos rho);

/// Sparse suffix array of the partitioning-set positions via representative
/// strings and the rank string S'_P. Requires a forward-synchronized set.
std::vector<Pos> ssa_of_pset(const Text& text, const PartitioningSet& pset);

/// Sparse suffix array of an arbitrary position set B, built from bounded
/// window keys plus the rank of the successor suffix in the set's SSA.
std::vector<Pos> ssa_of_B(const Text& text, const std::vector<Pos>& b,
                          const PartitioningSet& pset, const std::vector<Pos>& pset_ssa);

struct SstNode {
  int64_t parent = -1;
  Pos depth = 0;        // string depth
  Pos rep = 0;          // a suffix position inside the subtree (edge labels)
  Pos leaf_pos = 0;     // 0 for internal nodes
  std::vector<int64_t> children;
};

struct SparseSuffixIndex {
  std::vector<Pos> ssa;
  std::vector<Pos> lcp;          // lcp[k] = LCE(ssa[k], ssa[k+1])
  std::vector<SstNode> nodes;    // nodes[0] is the root

  int64_t leaves() const;
  int64_t internal_nodes() const;  // excluding the root

  /// Line-oriented "position lcp" records (lcp of the pair with the previous
  /// entry; 0 on the first line).
  std::string export_records() const;
  /// Parenthesized topology: (depth[:leaf] children...).
  std::string export_trie() const;
};

/// Compact trie over the sparse suffix array; LCP values come from the LCE
/// index (Kasai-style stack construction).
SparseSuffixIndex build_sst(const Text& text, const std::vector<Pos>& ssa,
                            const LceIndex& lce_idx);

/// Same construction from precomputed (ssa, lcp); n is the text length.
SparseSuffixIndex build_sst_arrays(Pos n, std::vector<Pos> ssa, std::vector<Pos> lcp);

}  // namespace sslce
