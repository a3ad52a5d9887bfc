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
#include <string>
#include <string_view>
#include <vector>

namespace sslce {

using Pos = int64_t;
using Sym = int32_t;

/// Read-only text over an integer alphabet. Public positions are 1-based, as
/// are all position arguments in this library. Input bytes map to symbols
/// [1..256]; symbol 0 is the virtual sentinel that pads both sides of the
/// text, so sym(i) is defined for every integer i.
class Text {
 public:
  Text() = default;
  explicit Text(std::vector<uint8_t> bytes) : bytes_(std::move(bytes)) {}
  explicit Text(std::string_view s) : bytes_(s.begin(), s.end()) {}

  Pos size() const { return static_cast<Pos>(bytes_.size()); }

  Sym sym(Pos i) const {
    if (i < 1 || i > size()) return 0;
    return static_cast<Sym>(bytes_[static_cast<size_t>(i - 1)]) + 1;
  }

  const std::vector<uint8_t>& bytes() const { return bytes_; }

  bool range_equal(Pos a, Pos b, Pos len) const {
    for (Pos k = 0; k < len; ++k)
      if (sym(a + k) != sym(b + k)) return false;
    return true;
  }

 private:
  std::vector<uint8_t> bytes_;
};

}  // namespace sslce
