// Copyright 2026 The sqlab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sqlab/rng.h"

#include <cmath>
#include <random>
#include <set>
#include <vector>

#include "gtest/gtest.h"
#include "sqlab/error.h"
#include "test_util.h"

namespace sqlab {
namespace {

using Block = std::array<std::uint32_t, 4>;

// Known-answer vectors from the Random123 distribution (kat_vectors).
TEST(Philox, KnownAnswerZero) {
  EXPECT_EQ(philox4x32_10({0, 0, 0, 0}, {0, 0}),
            (Block{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8}));
}

TEST(Philox, KnownAnswerAllOnes) {
  EXPECT_EQ(philox4x32_10({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff},
                          {0xffffffff, 0xffffffff}),
            (Block{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd}));
}

TEST(Philox, KnownAnswerPi) {
  EXPECT_EQ(philox4x32_10({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344},
                          {0xa4093822, 0x299f31d0}),
            (Block{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1}));
}

TEST(RngStream, SameSeedSameSequence) {
  RngStream a(42, 7), b(42, 7);
  for (int i = 0; i < 1000; ++i) ASSERT_EQ(a(), b());
}

TEST(RngStream, DifferentStreamsDiffer) {
  RngStream a(42, 7), b(42, 8), c(43, 7);
  int same_ab = 0, same_ac = 0;
  for (int i = 0; i < 100; ++i) {
    const auto x = a();
    same_ab += x == b();
    same_ac += x == c();
  }
  EXPECT_EQ(same_ab, 0);
  EXPECT_EQ(same_ac, 0);
}

TEST(RngStream, UniformIsInOpenInterval) {
  RngStream r(1, 2);
  double lo = 1.0, hi = 0.0, sum = 0.0;
  const int kN = 200000;
  for (int i = 0; i < kN; ++i) {
    const double u = r.uniform();
    ASSERT_GT(u, 0.0);
    ASSERT_LT(u, 1.0);
    lo = std::min(lo, u);
    hi = std::max(hi, u);
    sum += u;
  }
  EXPECT_NEAR(sum / kN, 0.5, 4.0 * std::sqrt(1.0 / 12.0 / kN));
  EXPECT_LT(lo, 1e-4);
  EXPECT_GT(hi, 1.0 - 1e-4);
}

TEST(RngStream, UniformPassesKs) {
  RngStream r(5, 5);
  std::vector<double> u(20000);
  for (double& v : u) v = r.uniform();
  EXPECT_LT(testing::ks_statistic(u, [](double x) { return x; }), 0.015);
}

TEST(RngStream, NormalMoments) {
  RngStream r(9, 1);
  const int kN = 400000;
  std::vector<double> x(kN);
  for (double& v : x) v = r.normal();
  double m1 = 0, m2 = 0, m4 = 0;
  for (double v : x) {
    m1 += v;
    m2 += v * v;
    m4 += v * v * v * v;
  }
  m1 /= kN;
  m2 /= kN;
  m4 /= kN;
  EXPECT_NEAR(m1, 0.0, 4.0 / std::sqrt(kN));
  EXPECT_NEAR(m2, 1.0, 4.0 * std::sqrt(2.0 / kN));
  EXPECT_NEAR(m4, 3.0, 4.0 * std::sqrt(96.0 / kN));
  std::vector<double> head(x.begin(), x.begin() + 20000);
  const double ks = testing::ks_statistic(
      head, [](double v) { return 0.5 * std::erfc(-v / std::sqrt(2.0)); });
  EXPECT_LT(ks, 0.015);
}

TEST(RngStream, WorksWithStdDistributions) {
  RngStream r(3, 3);
  std::uniform_int_distribution<int> die(1, 6);
  std::vector<int> counts(7, 0);
  for (int i = 0; i < 60000; ++i) ++counts[die(r)];
  for (int f = 1; f <= 6; ++f) EXPECT_NEAR(counts[f], 10000, 500);
}

TEST(Substream, SameParentAndIndexIsIdentical) {
  const RngStream parent(11, 22);
  RngStream a = spawn_substream(parent, 5);
  RngStream b = spawn_substream(parent, 5);
  for (int i = 0; i < 256; ++i) ASSERT_EQ(a(), b());
}

TEST(Substream, SiblingsDifferInFirstOutput) {
  const RngStream parent(11, 22);
  RngStream a = spawn_substream(parent, 0);
  RngStream b = spawn_substream(parent, 1);
  EXPECT_NE(a(), b());
}

TEST(Substream, SpawningDoesNotAdvanceParent) {
  RngStream parent(11, 22);
  RngStream copy = parent;
  (void)spawn_substream(parent, 3);
  EXPECT_EQ(parent(), copy());
}

TEST(Substream, FirstOutputsDistinctAcrossManyIndices) {
  const RngStream parent(77, 0);
  std::set<std::uint64_t> firsts;
  for (std::uint64_t i = 0; i < 20000; ++i) {
    RngStream s = spawn_substream(parent, i);
    firsts.insert(s());
  }
  EXPECT_EQ(firsts.size(), 20000u);
}

TEST(Substream, SiblingCrossCorrelationIsSmall) {
  const RngStream parent(123, 456);
  RngStream a = spawn_substream(parent, 0);
  RngStream b = spawn_substream(parent, 1);
  const int kN = 1000000;
  double sa = 0, sb = 0, sab = 0, saa = 0, sbb = 0;
  for (int i = 0; i < kN; ++i) {
    const double x = a.uniform();
    const double y = b.uniform();
    sa += x;
    sb += y;
    sab += x * y;
    saa += x * x;
    sbb += y * y;
  }
  const double cov = sab / kN - (sa / kN) * (sb / kN);
  const double va = saa / kN - (sa / kN) * (sa / kN);
  const double vb = sbb / kN - (sb / kN) * (sb / kN);
  EXPECT_LT(std::abs(cov / std::sqrt(va * vb)), 0.01);
}

TEST(HashName, StableAndDistinct) {
  EXPECT_EQ(hash_name("design"), hash_name("design"));
  EXPECT_NE(hash_name("design"), hash_name("designs"));
  // FNV-1a 64-bit of the empty string is the offset basis.
  EXPECT_EQ(hash_name(""), 0xcbf29ce484222325ull);
  EXPECT_EQ(hash_name("a"), 0xaf63dc4c8601ec8cull);
}

TEST(Mix64, IsABijectionOnSamples) {
  std::set<std::uint64_t> out;
  for (std::uint64_t i = 0; i < 10000; ++i) out.insert(mix64(i));
  EXPECT_EQ(out.size(), 10000u);
  EXPECT_NE(mix64(0), 0u);
}

TEST(ParseSeed, DecimalAndHex) {
  EXPECT_EQ(parse_seed("0"), 0u);
  EXPECT_EQ(parse_seed("18446744073709551615"), ~std::uint64_t{0});
  EXPECT_EQ(parse_seed("0xff"), 255u);
  EXPECT_EQ(parse_seed("0XFF"), 255u);
}

TEST(ParseSeed, RejectsGarbage) {
  for (const char* bad : {"", "abc", "-1", "12x", "0x", "18446744073709551616"}) {
    EXPECT_THROW(parse_seed(bad), PreconditionError) << bad;
  }
}

}  // namespace
}  // namespace sqlab
