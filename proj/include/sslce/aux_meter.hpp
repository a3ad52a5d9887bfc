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

#include <algorithm>
#include <cstdint>

namespace sslce {

/// Counts auxiliary machine words held by a construction algorithm. Builders
/// report their live data-structure sizes here; the peak is what the CLI and
/// the space-bound tests read. This measures words owned by the algorithm,
/// not allocator overhead.
struct AuxMeter {
  int64_t current = 0;
  int64_t peak = 0;

  void acquire(int64_t words) {
    current += words;
    peak = std::max(peak, current);
  }
  void release(int64_t words) { current -= words; }
  void note(int64_t live_words) { peak = std::max(peak, live_words); }
};

}  // namespace sslce
