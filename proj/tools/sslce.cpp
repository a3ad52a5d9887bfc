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

#include <chrono>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sslce/corpus.hpp"
#include "sslce/dcover.hpp"
#include "sslce/lce_index.hpp"
#include "sslce/oracle.hpp"
#include "sslce/partition_det.hpp"
#include "sslce/partition_rand.hpp"
#include "sslce/serialize.hpp"
#include "sslce/sparse_suffix.hpp"

using json = nlohmann::json;
using namespace sslce;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCorrupt = 3;

struct BuildOutput {
  std::string bytes;
  IndexMode mode;
  int64_t set_size = 0;
  int64_t peak_aux_words = 0;
  bool whp_fell_back = false;
};

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
      .count();
}

Text load_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open input: " + path);
  std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                             std::istreambuf_iterator<char>());
  return Text(std::move(bytes));
}

BuildOutput build_index(const Text& text, Pos tau, const std::string& mode, uint64_t seed) {
  BuildOutput out;
  if (mode == "rand") {
    RandStats stats;
    PartitioningSet p = build_rand(text, tau, seed, &stats);
    out.set_size = static_cast<int64_t>(p.positions.size());
    out.peak_aux_words = stats.aux.peak;
    out.mode = IndexMode::kRand;
    out.bytes = serialize_index(build_lce(text, std::move(p)), out.mode);
  } else if (mode == "rand-whp") {
    RandStats stats;
    bool fell_back = false;
    PartitioningSet p = build_rand_whp(text, tau, seed, &stats, &fell_back);
    out.set_size = static_cast<int64_t>(p.positions.size());
    out.peak_aux_words = stats.aux.peak;
    out.whp_fell_back = fell_back;
    out.mode = IndexMode::kRandWhp;
    out.bytes = serialize_index(build_lce(text, std::move(p)), out.mode);
  } else if (mode == "det") {
    DetStats stats;
    PartitioningSet p = build_det(text, tau, {}, &stats);
    out.set_size = static_cast<int64_t>(p.positions.size());
    out.peak_aux_words = stats.aux.peak;
    out.mode = IndexMode::kDet;
    out.bytes = serialize_index(build_lce(text, std::move(p)), out.mode);
  } else if (mode == "dcover") {
    DcIndex idx = build_dc(text, tau);
    out.set_size = static_cast<int64_t>(idx.q_set().size());
    out.peak_aux_words = static_cast<int64_t>(idx.q_set().size() + idx.ssa().size());
    out.mode = IndexMode::kDcover;
    out.bytes = serialize_index(idx);
  } else {
    throw CLI::ValidationError("--mode", "unknown mode: " + mode);
  }
  return out;
}

int cmd_build(const std::string& input, Pos tau, const std::string& mode, uint64_t seed,
              const std::string& out_path) {
  Text text = load_text(input);
  if (tau < 1 || tau > text.size()) {
    std::cerr << "error: tau must be in [1.." << text.size() << "]\n";
    return kExitUsage;
  }
  auto t0 = std::chrono::steady_clock::now();
  BuildOutput built = build_index(text, tau, mode, seed);
  double build_ms = ms_since(t0);
  save_index_file(out_path, built.bytes);
  json summary{{"n", text.size()},         {"tau", tau},
               {"mode", mode},             {"set_size", built.set_size},
               {"build_ms", build_ms},     {"peak_aux_words", built.peak_aux_words}};
  if (built.whp_fell_back) summary["whp_fell_back"] = true;
  std::cout << summary.dump() << "\n";
  return kExitOk;
}

int cmd_query(const std::string& index_path, const std::string& pairs_path, int64_t random_k,
              uint64_t seed) {
  AnyIndex idx = load_index_file(index_path);
  Pos n = idx.text_size();
  std::vector<std::pair<Pos, Pos>> pairs;
  if (!pairs_path.empty()) {
    std::ifstream in(pairs_path);
    if (!in) throw std::runtime_error("cannot open pairs file: " + pairs_path);
    std::string line;
    int64_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      std::istringstream ls(line);
      Pos i = 0, j = 0;
      if (!(ls >> i >> j) || i < 1 || j < 1 || i > n || j > n) {
        std::cerr << "error: malformed pair at line " << lineno << ": " << line << "\n";
        return kExitUsage;
      }
      pairs.emplace_back(i, j);
    }
  } else {
    SplitMix64 rng(seed);
    for (int64_t k = 0; k < random_k; ++k)
      pairs.emplace_back(1 + static_cast<Pos>(rng.next_below(static_cast<uint64_t>(n))),
                         1 + static_cast<Pos>(rng.next_below(static_cast<uint64_t>(n))));
  }
  for (auto [i, j] : pairs) {
    LceStats st = idx.query(i, j);
    json rec{{"i", i}, {"j", j}, {"lce", st.lce}, {"comparisons", st.comparisons}};
    std::cout << rec.dump() << "\n";
  }
  return kExitOk;
}

int cmd_verify(const std::string& input, Pos tau, const std::string& mode, int64_t trials,
               uint64_t seed, bool inject_fault) {
  Text text = load_text(input);
  Pos n = text.size();
  if (tau < 1 || tau > n) {
    std::cerr << "error: tau must be in [1.." << n << "]\n";
    return kExitUsage;
  }
  json report;
  report["n"] = n;
  report["tau"] = tau;
  report["mode"] = mode;
  bool ok = true;
  auto fail = [&](const std::string& check, const std::string& detail) {
    ok = false;
    std::cerr << "verify FAILED [" << check << "]: " << detail << "\n";
  };
  auto excerpt = [&](Pos i) {
    std::string s;
    for (Pos k = i; k < i + 16 && k <= n; ++k)
      s.push_back(static_cast<char>(text.bytes()[static_cast<size_t>(k - 1)]));
    return s;
  };

  if (trials == 0) std::cerr << "warning: trials=0 gives a vacuous pass\n";

  // Build the requested index and its partitioning properties.
  std::optional<PartitioningSet> pset;
  std::optional<DcIndex> dcidx;
  std::optional<LceIndex> lceidx;
  if (mode == "rand")
    pset = build_rand(text, tau, seed);
  else if (mode == "rand-whp")
    pset = build_rand_whp(text, tau, seed);
  else if (mode == "det")
    pset = build_det(text, tau);
  else if (mode == "dcover")
    dcidx = build_dc(text, tau);
  else {
    std::cerr << "error: unknown mode " << mode << "\n";
    return kExitUsage;
  }
  if (pset) lceidx = build_lce(text, *pset);

  if (pset) {
    auto rep = oracle::check_pset(text, *pset);
    report["pset_blocks"] = rep.blocks;
    report["pset_size_ratio"] = rep.size_ratio;
    if (!rep.ok) fail("pset", rep.first_violation);
  }

  // LCE batches against the naive oracle.
  SplitMix64 rng(seed ^ 0x715ea11u);
  int64_t lce_checked = 0;
  for (int64_t k = 0; k < trials && ok; ++k) {
    Pos i = 1 + static_cast<Pos>(rng.next_below(static_cast<uint64_t>(n)));
    Pos j = 1 + static_cast<Pos>(rng.next_below(static_cast<uint64_t>(n)));
    Pos want = oracle::naive_lce(text, i, j);
    Pos got = dcidx ? dcidx->lce(i, j) : lceidx->lce(i, j);
    if (inject_fault) ++got;  // debug hook: prove the counterexample path works
    ++lce_checked;
    if (got != want)
      fail("lce", "pair (" + std::to_string(i) + "," + std::to_string(j) + ") got " +
                      std::to_string(got) + " want " + std::to_string(want) + " near \"" +
                      excerpt(std::max<Pos>(1, i)) + "\"");
  }
  report["lce_pairs"] = lce_checked;

  // Sparse suffix array on a random B (partitioning modes only).
  if (pset && ok) {
    std::set<Pos> bset;
    int64_t want_sz = std::min<int64_t>(n, std::max<int64_t>(2, trials > 0 ? 256 : 0));
    while (static_cast<int64_t>(bset.size()) < want_sz)
      bset.insert(1 + static_cast<Pos>(rng.next_below(static_cast<uint64_t>(n))));
    std::vector<Pos> b(bset.begin(), bset.end());
    if (!b.empty()) {
      auto pssa = ssa_of_pset(text, *pset);
      auto got = ssa_of_B(text, b, *pset, pssa);
      auto want = oracle::naive_ssa(text, b);
      report["ssa_positions"] = static_cast<int64_t>(b.size());
      if (got != want) {
        size_t at = 0;
        while (at < got.size() && got[at] == want[at]) ++at;
        fail("ssa", "first divergence at order index " + std::to_string(at) + " got position " +
                        std::to_string(got[at]) + " want " + std::to_string(want[at]) +
                        " text near \"" + excerpt(want[at]) + "\"");
      }
    }
  }

  // Runs detection against the brute-force enumerator.
  if (tau >= 6 && ok) {
    auto got = find_runs(text, tau, seed);
    auto want = oracle::naive_runs(text, tau);
    report["runs"] = static_cast<int64_t>(want.size());
    if (got != want) {
      size_t at = 0;
      while (at < got.size() && at < want.size() && got[at] == want[at]) ++at;
      std::string detail = "run list mismatch at entry " + std::to_string(at);
      if (at < want.size())
        detail += " want [" + std::to_string(want[at].start) + "," +
                  std::to_string(want[at].end) + "] rho=" + std::to_string(want[at].period) +
                  " text \"" + excerpt(want[at].start) + "\"";
      fail("runs", detail);
    }
  }

  report["ok"] = ok;
  std::cout << report.dump() << "\n";
  return ok ? kExitOk : kExitVerifyFail;
}

int cmd_bench(const std::string& input, const std::vector<Pos>& taus,
              const std::vector<std::string>& modes, int64_t queries, uint64_t seed) {
  Text text = load_text(input);
  Pos n = text.size();
  std::cout << "mode,tau,n,set_size,build_ms,avg_comparisons,max_comparisons,peak_aux_words\n";
  for (const std::string& mode : modes) {
    for (Pos tau : taus) {
      if (tau < 1 || tau > n) {
        std::cerr << "error: tau " << tau << " out of [1.." << n << "]\n";
        return kExitUsage;
      }
      auto t0 = std::chrono::steady_clock::now();
      BuildOutput built = build_index(text, tau, mode, seed);
      double build_ms = ms_since(t0);
      AnyIndex idx = deserialize_index(built.bytes);
      SplitMix64 rng(seed ^ (tau * 1315423911ull));
      int64_t total_cmp = 0, max_cmp = 0;
      for (int64_t q = 0; q < queries; ++q) {
        Pos i = 1 + static_cast<Pos>(rng.next_below(static_cast<uint64_t>(n)));
        Pos j = 1 + static_cast<Pos>(rng.next_below(static_cast<uint64_t>(n)));
        auto st = idx.query(i, j);
        total_cmp += st.comparisons;
        max_cmp = std::max(max_cmp, st.comparisons);
      }
      double avg = queries > 0 ? static_cast<double>(total_cmp) / static_cast<double>(queries)
                               : 0.0;
      std::cout << mode << ',' << tau << ',' << n << ',' << built.set_size << ',' << build_ms
                << ',' << avg << ',' << max_cmp << ',' << built.peak_aux_words << "\n";
    }
  }
  return kExitOk;
}

int cmd_gen(const std::string& kind, Pos n, int sigma, uint64_t seed, const std::string& out) {
  Text t = gen_corpus(kind, n, sigma, seed);
  std::ofstream f(out, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot open output: " + out);
  f.write(reinterpret_cast<const char*>(t.bytes().data()),
          static_cast<std::streamsize>(t.bytes().size()));
  return kExitOk;
}

std::vector<Pos> parse_tau_list(const std::string& s) {
  std::vector<Pos> taus;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) taus.push_back(std::stoll(item));
  }
  return taus;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sublinear-space LCE and sparse suffix indexing"};
  app.require_subcommand(1);

  std::string input, out_path, index_path, pairs_path, mode = "rand", gen_kind = "random";
  std::string tau_list = "16,64,256", modes_list = "rand,det,dcover";
  Pos tau = 16, gen_n = 0;
  int sigma = 2;
  uint64_t seed = 0;
  int64_t random_k = 0, trials = 1000, queries = 1000;

  auto* b = app.add_subcommand("build", "build an index and write an SSLCE1 file");
  b->add_option("--input", input)->required();
  b->add_option("--tau", tau)->required();
  b->add_option("--mode", mode)->check(CLI::IsMember({"rand", "rand-whp", "det", "dcover"}));
  b->add_option("--seed", seed);
  b->add_option("--out", out_path)->required();

  auto* q = app.add_subcommand("query", "answer LCE queries from an index file");
  q->add_option("--index", index_path)->required();
  q->add_option("--pairs", pairs_path);
  q->add_option("--random", random_k);
  q->add_option("--seed", seed);

  bool inject_fault = false;
  auto* v = app.add_subcommand("verify", "cross-check an index against brute force");
  v->add_option("--input", input)->required();
  v->add_option("--tau", tau)->required();
  v->add_option("--mode", mode)->check(CLI::IsMember({"rand", "rand-whp", "det", "dcover"}));
  v->add_option("--trials", trials);
  v->add_option("--seed", seed);
  v->add_flag("--inject-fault", inject_fault)->group("");  // hidden debug hook

  auto* be = app.add_subcommand("bench", "measure builds and query comparison counts");
  be->add_option("--input", input)->required();
  be->add_option("--tau-list", tau_list);
  be->add_option("--modes", modes_list);
  be->add_option("--queries", queries);
  be->add_option("--seed", seed);

  auto* g = app.add_subcommand("gen", "generate a corpus file");
  g->add_option("--gen", gen_kind)
      ->check(CLI::IsMember({"random", "periodic", "fibonacci", "thue-morse"}));
  g->add_option("--n", gen_n)->required();
  g->add_option("--sigma", sigma);
  g->add_option("--seed", seed);
  g->add_option("--out", out_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (b->parsed()) return cmd_build(input, tau, mode, seed, out_path);
    if (q->parsed()) {
      if (pairs_path.empty() && random_k <= 0) {
        std::cerr << "error: query needs --pairs or --random\n";
        return kExitUsage;
      }
      return cmd_query(index_path, pairs_path, random_k, seed);
    }
    if (v->parsed()) return cmd_verify(input, tau, mode, trials, seed, inject_fault);
    if (be->parsed()) {
      auto taus = parse_tau_list(tau_list);
      std::vector<std::string> modes;
      std::stringstream ss(modes_list);
      std::string item;
      while (std::getline(ss, item, ','))
        if (!item.empty()) modes.push_back(item);
      if (taus.empty() || modes.empty()) {
        std::cerr << "error: empty --tau-list or --modes\n";
        return kExitUsage;
      }
      return cmd_bench(input, taus, modes, queries, seed);
    }
    if (g->parsed()) return cmd_gen(gen_kind, gen_n, sigma, seed, out_path);
  } catch (const CorruptIndexError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCorrupt;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
