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

#include <optional>
#include <stdexcept>
#include <string>

#include "sslce/dcover.hpp"
#include "sslce/lce_index.hpp"

namespace sslce {

/// Index file modes inside the SSLCE1 envelope.
enum class IndexMode : uint32_t { kRand = 1, kRandWhp = 2, kDet = 3, kDcover = 4 };

struct CorruptIndexError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct AnyIndex {
  IndexMode mode = IndexMode::kRand;
  std::optional<LceIndex> lce;
  std::optional<DcIndex> dc;

  Pos text_size() const { return dc ? dc->text().size() : lce->text().size(); }
  LceStats query(Pos i, Pos j) const { return dc ? dc->lce_stats(i, j) : lce->lce_stats(i, j); }
  int64_t set_size() const {
    return dc ? static_cast<int64_t>(dc->q_set().size())
              : static_cast<int64_t>(lce->pset().positions.size());
  }
};

/// Versioned little-endian binary: magic "SSLCE1", u32 version, mode tag,
/// the text, then the mode's tables. Loading rejects unknown versions.
std::string serialize_index(const LceIndex& idx, IndexMode mode);
std::string serialize_index(const DcIndex& idx);

AnyIndex deserialize_index(const std::string& bytes);

void save_index_file(const std::string& path, const std::string& bytes);
std::string read_file_bytes(const std::string& path);  // throws on IO failure
AnyIndex load_index_file(const std::string& path);

}  // namespace sslce
