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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "sslce/corpus.hpp"
#include "sslce/dcover.hpp"
#include "sslce/partition_rand.hpp"
#include "sslce/serialize.hpp"

using namespace sslce;

namespace {

#ifndef SSLCE_BIN
#define SSLCE_BIN "sslce"
#endif

int run(const std::string& args) {
  std::string cmd = std::string(SSLCE_BIN) + " " + args + " >/dev/null 2>&1";
  int rc = std::system(cmd.c_str());
  return WEXITSTATUS(rc);
}

std::string capture(const std::string& args) {
  std::string cmd = std::string(SSLCE_BIN) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, got);
  pclose(p);
  return out;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

}  // namespace

TEST_CASE("serialization round trip preserves queries") {
  Text t = gen_random(3000, 4, 9);
  auto p = build_rand(t, 24, 5);
  LceIndex idx = build_lce(t, p);
  std::string bytes = serialize_index(idx, IndexMode::kRand);
  AnyIndex back = deserialize_index(bytes);
  REQUIRE(back.mode == IndexMode::kRand);
  SplitMix64 rng(2);
  for (int q = 0; q < 3000; ++q) {
    Pos i = 1 + static_cast<Pos>(rng.next_below(3000));
    Pos j = 1 + static_cast<Pos>(rng.next_below(3000));
    auto a = idx.lce_stats(i, j);
    auto b = back.query(i, j);
    REQUIRE(a.lce == b.lce);
    REQUIRE(a.comparisons == b.comparisons);
  }
}

TEST_CASE("dcover serialization round trip") {
  Text t = gen_fibonacci(2500);
  DcIndex idx = build_dc(t, 40);
  AnyIndex back = deserialize_index(serialize_index(idx));
  REQUIRE(back.mode == IndexMode::kDcover);
  SplitMix64 rng(3);
  for (int q = 0; q < 2000; ++q) {
    Pos i = 1 + static_cast<Pos>(rng.next_below(2500));
    Pos j = 1 + static_cast<Pos>(rng.next_below(2500));
    REQUIRE(idx.lce(i, j) == back.query(i, j).lce);
  }
}

TEST_CASE("loader rejects bad magic, bad version, truncation") {
  Text t = gen_random(100, 3, 1);
  auto p = build_rand(t, 8, 1);
  std::string bytes = serialize_index(build_lce(t, p), IndexMode::kRand);

  std::string bad = bytes;
  bad[0] = 'X';
  CHECK_THROWS_AS(deserialize_index(bad), CorruptIndexError);

  std::string v2 = bytes;
  v2[6] = 2;  // version field
  CHECK_THROWS_AS(deserialize_index(v2), CorruptIndexError);

  std::string trunc = bytes.substr(0, bytes.size() / 2);
  CHECK_THROWS_AS(deserialize_index(trunc), CorruptIndexError);

  std::string badmode = bytes;
  badmode[10] = 9;  // mode field
  CHECK_THROWS_AS(deserialize_index(badmode), CorruptIndexError);
}

TEST_CASE("identical builds serialize byte-identically") {
  Text t = gen_thue_morse(4000);
  for (int round = 0; round < 2; ++round) {
    auto a = serialize_index(build_lce(t, build_rand(t, 32, 77)), IndexMode::kRand);
    auto b = serialize_index(build_lce(t, build_rand(t, 32, 77)), IndexMode::kRand);
    REQUIRE(a == b);
    auto c = serialize_index(build_dc(t, 32));
    auto d = serialize_index(build_dc(t, 32));
    REQUIRE(c == d);
  }
}

TEST_CASE("cli end to end: gen, build, query, verify") {
  std::string dir = "/tmp/sslce_cli_test";
  REQUIRE(std::system(("rm -rf " + dir + " && mkdir -p " + dir).c_str()) == 0);
  std::string corpus = dir + "/c.bin";
  CHECK(run("gen --gen random --n 20000 --sigma 4 --seed 11 --out " + corpus) == 0);

  for (std::string mode : {"rand", "rand-whp", "det", "dcover"}) {
    std::string idx1 = dir + "/a_" + mode + ".idx";
    std::string idx2 = dir + "/b_" + mode + ".idx";
    CHECK(run("build --input " + corpus + " --tau 32 --mode " + mode + " --seed 9 --out " + idx1) == 0);
    CHECK(run("build --input " + corpus + " --tau 32 --mode " + mode + " --seed 9 --out " + idx2) == 0);
    CHECK(slurp(idx1) == slurp(idx2));  // reproducibility

    std::string q1 = capture("query --index " + idx1 + " --random 64 --seed 5");
    std::string q2 = capture("query --index " + idx1 + " --random 64 --seed 5");
    CHECK(q1 == q2);
    CHECK(!q1.empty());
  }

  // pairs file with the identity pair
  std::string pairs = dir + "/pairs.txt";
  {
    std::ofstream f(pairs);
    f << "5 5\n1 2\n";
  }
  std::string out = capture("query --index " + dir + "/a_rand.idx --pairs " + pairs);
  CHECK(out.find("\"lce\":19996") != std::string::npos);  // n - 5 + 1

  CHECK(run("verify --input " + corpus + " --tau 24 --mode det --trials 200 --seed 1") == 0);
  CHECK(run("verify --input " + corpus + " --tau 24 --mode dcover --trials 200 --seed 1") == 0);
  // trials=0 is a vacuous pass; the hidden fault hook must trip the failure path
  CHECK(run("verify --input " + corpus + " --tau 24 --mode rand --trials 0") == 0);
  CHECK(run("verify --input " + corpus + " --tau 24 --mode rand --trials 50 --inject-fault") == 1);
}

TEST_CASE("cli error paths and exit codes") {
  std::string dir = "/tmp/sslce_cli_test2";
  REQUIRE(std::system(("rm -rf " + dir + " && mkdir -p " + dir).c_str()) == 0);
  CHECK(run("build --input " + dir + "/missing.bin --tau 4 --mode rand --out " + dir + "/x.idx") == 2);

  std::string corpus = dir + "/c.bin";
  REQUIRE(run("gen --gen periodic --n 500 --sigma 3 --out " + corpus) == 0);
  CHECK(run("build --input " + corpus + " --tau 0 --mode rand --out " + dir + "/x.idx") == 2);
  CHECK(run("build --input " + corpus + " --tau 501 --mode rand --out " + dir + "/x.idx") == 2);
  CHECK(run("build --input " + corpus + " --tau 4 --mode nope --out " + dir + "/x.idx") == 2);

  std::ofstream(dir + "/bad.idx") << "JUNKJUNKJUNKJUNK";
  CHECK(run("query --index " + dir + "/bad.idx --random 1") == 3);

  // malformed pairs line
  REQUIRE(run("build --input " + corpus + " --tau 4 --mode rand --out " + dir + "/ok.idx") == 0);
  std::ofstream(dir + "/badpairs.txt") << "1 2\nbogus line\n";
  CHECK(run("query --index " + dir + "/ok.idx --pairs " + dir + "/badpairs.txt") == 2);

  CHECK(run("bench --input " + corpus + " --tau-list '' --queries 1") == 2);
}
