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

#include "sslce/serialize.hpp"

#include <cstring>
#include <fstream>

namespace sslce {

namespace {

constexpr char kMagic[6] = {'S', 'S', 'L', 'C', 'E', '1'};
constexpr uint32_t kVersion = 1;

class Writer {
 public:
  std::string take() { return std::move(out_); }

  void u8(uint8_t v) { out_.push_back(static_cast<char>(v)); }
  void u32(uint32_t v) {
    for (int k = 0; k < 4; ++k) out_.push_back(static_cast<char>((v >> (8 * k)) & 0xff));
  }
  void u64(uint64_t v) {
    for (int k = 0; k < 8; ++k) out_.push_back(static_cast<char>((v >> (8 * k)) & 0xff));
  }
  void i64(int64_t v) { u64(static_cast<uint64_t>(v)); }
  void bytes(const std::vector<uint8_t>& b) {
    out_.append(reinterpret_cast<const char*>(b.data()), b.size());
  }
  template <typename T>
  void vec64(const std::vector<T>& v) {
    u64(v.size());
    for (const T& x : v) i64(static_cast<int64_t>(x));
  }
  void rmq(const RmqSparseTable& r) {
    u32(static_cast<uint32_t>(r.rows().size()));
    for (const auto& row : r.rows()) {
      u64(row.size());
      for (int32_t x : row) u32(static_cast<uint32_t>(x));
    }
  }

 private:
  std::string out_;
};

class Reader {
 public:
  explicit Reader(const std::string& s) : s_(s) {}

  uint8_t u8() { return static_cast<uint8_t>(take(1)[0]); }
  uint32_t u32() {
    const char* p = take(4);
    uint32_t v = 0;
    for (int k = 0; k < 4; ++k) v |= static_cast<uint32_t>(static_cast<uint8_t>(p[k])) << (8 * k);
    return v;
  }
  uint64_t u64() {
    const char* p = take(8);
    uint64_t v = 0;
    for (int k = 0; k < 8; ++k) v |= static_cast<uint64_t>(static_cast<uint8_t>(p[k])) << (8 * k);
    return v;
  }
  int64_t i64() { return static_cast<int64_t>(u64()); }
  std::vector<uint8_t> bytes(size_t count) {
    const char* p = take(count);
    return std::vector<uint8_t>(p, p + count);
  }
  template <typename T>
  std::vector<T> vec64() {
    uint64_t count = u64();
    if (count > s_.size()) throw CorruptIndexError("index file truncated");
    std::vector<T> v(static_cast<size_t>(count));
    for (auto& x : v) x = static_cast<T>(i64());
    return v;
  }
  RmqSparseTable rmq(std::vector<int64_t> values) {
    uint32_t levels = u32();
    std::vector<std::vector<int32_t>> rows(levels);
    for (auto& row : rows) {
      uint64_t len = u64();
      if (len > s_.size()) throw CorruptIndexError("index file truncated");
      row.resize(static_cast<size_t>(len));
      for (auto& x : row) x = static_cast<int32_t>(u32());
    }
    return RmqSparseTable(std::move(values), std::move(rows));
  }

 private:
  const char* take(size_t count) {
    if (pos_ + count > s_.size()) throw CorruptIndexError("index file truncated");
    const char* p = s_.data() + pos_;
    pos_ += count;
    return p;
  }
  const std::string& s_;
  size_t pos_ = 0;
};

void write_header(Writer& w, IndexMode mode, const Text& text) {
  for (char c : kMagic) w.u8(static_cast<uint8_t>(c));
  w.u32(kVersion);
  w.u32(static_cast<uint32_t>(mode));
  w.u64(static_cast<uint64_t>(text.size()));
  w.bytes(text.bytes());
}

void write_pset(Writer& w, const PartitioningSet& p) {
  w.i64(p.tau);
  w.i64(p.delta);
  w.u8(p.forward_sync ? 1 : 0);
  w.vec64(p.positions);
  w.u64(p.block_periods.size());
  for (auto [s, rho] : p.block_periods) {
    w.i64(s);
    w.i64(rho);
  }
}

PartitioningSet read_pset(Reader& r) {
  PartitioningSet p;
  p.tau = r.i64();
  p.delta = r.i64();
  p.forward_sync = r.u8() != 0;
  p.positions = r.vec64<Pos>();
  uint64_t bp = r.u64();
  p.block_periods.resize(static_cast<size_t>(bp));
  for (auto& [s, rho] : p.block_periods) {
    s = r.i64();
    rho = r.i64();
  }
  return p;
}

}  // namespace

std::string serialize_index(const LceIndex& idx, IndexMode mode) {
  Writer w;
  write_header(w, mode, idx.text());
  write_pset(w, idx.pset());
  w.vec64(idx.partitioning_string());
  w.i64(idx.distinct_blocks());
  w.vec64(idx.sa());
  w.vec64(idx.lcp());
  w.rmq(idx.rmq());
  w.vec64(idx.successor_samples());
  return w.take();
}

std::string serialize_index(const DcIndex& idx) {
  Writer w;
  write_header(w, IndexMode::kDcover, idx.text());
  const DcParams& p = idx.params();
  w.i64(p.tau);
  w.i64(p.tau_prime);
  w.i64(p.lstar);
  w.i64(p.r);
  w.i64(p.lstar_eff);
  w.i64(p.delta);
  w.u8(p.small_tau ? 1 : 0);
  w.i64(p.dc_modulus);
  w.vec64(idx.q_set());
  w.vec64(idx.ssa());
  w.vec64(idx.lcp());
  w.rmq(idx.rmq());
  w.vec64(idx.dc_residues());
  w.vec64(idx.successor_samples());
  return w.take();
}

AnyIndex deserialize_index(const std::string& bytes) {
  Reader r(bytes);
  auto magic = r.bytes(6);
  if (std::memcmp(magic.data(), kMagic, 6) != 0)
    throw CorruptIndexError("bad magic: not an SSLCE1 index");
  uint32_t version = r.u32();
  if (version != kVersion)
    throw CorruptIndexError("unsupported index version " + std::to_string(version));
  uint32_t mode = r.u32();
  uint64_t n = r.u64();
  if (n > bytes.size()) throw CorruptIndexError("index file truncated");
  Text text(r.bytes(static_cast<size_t>(n)));

  AnyIndex out;
  out.mode = static_cast<IndexMode>(mode);
  switch (out.mode) {
    case IndexMode::kRand:
    case IndexMode::kRandWhp:
    case IndexMode::kDet: {
      PartitioningSet pset = read_pset(r);
      auto sp = r.vec64<int64_t>();
      int64_t distinct = r.i64();
      auto sa = r.vec64<int64_t>();
      auto lcp = r.vec64<int64_t>();
      RmqSparseTable rmq = r.rmq(lcp);
      auto succ = r.vec64<int64_t>();
      out.lce = LceIndex::from_parts(std::move(text), std::move(pset), std::move(sp), distinct,
                                     std::move(sa), std::move(lcp), std::move(rmq),
                                     std::move(succ));
      return out;
    }
    case IndexMode::kDcover: {
      DcParams p;
      p.tau = r.i64();
      p.tau_prime = r.i64();
      p.lstar = r.i64();
      p.r = r.i64();
      p.lstar_eff = r.i64();
      p.delta = r.i64();
      p.small_tau = r.u8() != 0;
      p.dc_modulus = r.i64();
      auto q = r.vec64<Pos>();
      auto ssa = r.vec64<Pos>();
      auto lcp = r.vec64<Pos>();
      RmqSparseTable rmq = r.rmq(std::vector<int64_t>(lcp.begin(), lcp.end()));
      auto dc = r.vec64<int64_t>();
      auto succ = r.vec64<int64_t>();
      out.dc = DcIndex::from_parts(std::move(text), p, std::move(q), std::move(ssa),
                                   std::move(lcp), std::move(rmq), std::move(dc),
                                   std::move(succ));
      return out;
    }
    default:
      throw CorruptIndexError("unknown index mode " + std::to_string(mode));
  }
}

void save_index_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::string read_file_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open: " + path);
  std::string s((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return s;
}

AnyIndex load_index_file(const std::string& path) {
  return deserialize_index(read_file_bytes(path));
}

}  // namespace sslce
