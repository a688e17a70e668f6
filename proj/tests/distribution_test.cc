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

#include "sqlab/distribution.h"

#include <cmath>
#include <vector>

#include "gtest/gtest.h"
#include "sqlab/error.h"
#include "test_util.h"

namespace sqlab {
namespace {

BornDistribution bell_distribution() {
  return BornDistribution::from_probs(2, {0.5, 0.0, 0.0, 0.5});
}

TEST(BornDistribution, ValidatesInput) {
  EXPECT_THROW(BornDistribution::from_probs(1, {0.5, 0.6}), PreconditionError);
  EXPECT_THROW(BornDistribution::from_probs(1, {1.5, -0.5}), PreconditionError);
  EXPECT_THROW(BornDistribution::from_probs(2, {0.5, 0.5}), PreconditionError);
  EXPECT_THROW(BornDistribution::from_probs(1, {NAN, 1.0}), PreconditionError);
  const BornDistribution p = BornDistribution::from_probs(1, {1.0 + 1e-13, -1e-13});
  EXPECT_GE(p[1], 0.0);
}

TEST(QueryFunction, ValidatesRange) {
  EXPECT_THROW(QueryFunction(1, {0.0, 1.5}), PreconditionError);
  EXPECT_THROW(QueryFunction(1, {-1.01, 0.0}), PreconditionError);
  EXPECT_THROW(QueryFunction(2, {0.0, 0.0}), PreconditionError);
  EXPECT_NO_THROW(QueryFunction(1, {-1.0, 1.0}));
  const std::vector<std::uint64_t> members = {0, 3};
  const QueryFunction ind = QueryFunction::indicator(2, members);
  EXPECT_EQ(ind, QueryFunction(2, {1.0, 0.0, 0.0, 1.0}));
}

TEST(TvDistance, Examples) {
  const BornDistribution u3 = BornDistribution::uniform(3);
  EXPECT_EQ(tv_distance(u3, u3), 0.0);
  EXPECT_DOUBLE_EQ(tv_distance(BornDistribution::point_mass(3, 6), u3), 0.875);
  EXPECT_DOUBLE_EQ(tv_distance(bell_distribution(), BornDistribution::uniform(2)), 0.5);
  EXPECT_THROW(tv_distance(u3, BornDistribution::uniform(2)), PreconditionError);
}

TEST(Functional, Examples) {
  RngStream rng(1, 1);
  const BornDistribution p = testing::random_distribution(4, rng);
  EXPECT_NEAR(functional(p, QueryFunction::constant(4, 1.0)), 1.0, 1e-15);

  const QueryFunction phi(2, {0.25, -1.0, 0.5, 1.0});
  EXPECT_DOUBLE_EQ(functional(BornDistribution::uniform(2), phi), 0.75 / 4.0);

  const std::vector<std::uint64_t> s = {0, 3};
  EXPECT_DOUBLE_EQ(functional(bell_distribution(), QueryFunction::indicator(2, s)), 1.0);
}

TEST(FunctionalProperty, LinearAndLipschitzInL1) {
  RngStream rng(1, 2);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + trial % 6;
    const BornDistribution p = testing::random_distribution(n, rng);
    const BornDistribution q = testing::random_distribution(n, rng);
    std::vector<double> a(p.size()), b(p.size()), mix(p.size());
    for (std::size_t x = 0; x < p.size(); ++x) {
      a[x] = 2.0 * rng.uniform() - 1.0;
      b[x] = 2.0 * rng.uniform() - 1.0;
      mix[x] = 0.3 * a[x] + 0.7 * b[x];
    }
    const QueryFunction fa(n, a), fb(n, b), fm(n, mix);
    EXPECT_NEAR(functional(p, fm), 0.3 * functional(p, fa) + 0.7 * functional(p, fb),
                1e-14);
    EXPECT_LE(std::abs(functional(p, fa) - functional(q, fa)),
              2.0 * tv_distance(p, q) + 1e-15);
  }
}

TEST(Norms, EqualDistributionsGiveZero) {
  const NormReport r = norms_of_difference(bell_distribution(), bell_distribution());
  EXPECT_EQ(r.l1, 0.0);
  EXPECT_EQ(r.l2, 0.0);
  EXPECT_EQ(r.l4, 0.0);
  EXPECT_EQ(r.berger_lower, 0.0);
}

TEST(Norms, PointMassAgainstUniformOneQubit) {
  // f = (1/2, -1/2): l1 = 1, l2 = 2^{-1/2}, l4 = 2^{-3/4}, l2^3 / l4^2 = 1.
  const NormReport r =
      norms_of_difference(BornDistribution::point_mass(1, 0), BornDistribution::uniform(1));
  EXPECT_DOUBLE_EQ(r.l1, 1.0);
  EXPECT_DOUBLE_EQ(r.l2, std::pow(2.0, -0.5));
  EXPECT_NEAR(r.l4, std::pow(2.0, -0.75), 1e-15);
  EXPECT_NEAR(r.berger_lower, 1.0, 1e-14);
}

TEST(NormsProperty, BergerInequality) {
  RngStream rng(1, 3);
  for (int n = 1; n <= 8; ++n) {
    for (int k = 0; k < 10000; ++k) {
      const BornDistribution p = testing::random_distribution(n, rng);
      const BornDistribution q = k % 10 == 0 ? BornDistribution::point_mass(n, rng() % p.size())
                                             : testing::random_distribution(n, rng);
      const NormReport r = norms_of_difference(p, q);
      ASSERT_GE(r.l1, r.berger_lower * (1.0 - 1e-12)) << "n=" << n;
      ASSERT_LE(r.l4, r.l2 * (1.0 + 1e-12));
    }
  }
}

TEST(CollisionStats, Examples) {
  for (int n = 1; n <= 6; ++n) {
    const CollisionStats u = collision_stats(BornDistribution::uniform(n));
    EXPECT_NEAR(u.z, std::exp2(-n), 1e-15);
    EXPECT_NEAR(u.x, std::exp2(-3 * n), 1e-18);
    const CollisionStats pm = collision_stats(BornDistribution::point_mass(n, 1));
    EXPECT_EQ(pm.z, 1.0);
    EXPECT_EQ(pm.x, 1.0);
  }
}

TEST(Witness, Examples) {
  const BornDistribution u = BornDistribution::uniform(2);
  const QueryFunction same = max_tv_witness(u, u);
  for (double v : same.table()) EXPECT_EQ(v, 0.0);
  const QueryFunction w = max_tv_witness(bell_distribution(), u);
  EXPECT_EQ(w, QueryFunction(2, {1.0, 0.0, 0.0, 1.0}));
  EXPECT_DOUBLE_EQ(functional(bell_distribution(), w) - functional(u, w), 0.5);
}

// Brute force over every subset S of {0,1}^n.
double max_subset_gap(const BornDistribution& p, const BornDistribution& q) {
  double best = 0.0;
  for (std::uint64_t mask = 0; mask < (1ull << p.size()); ++mask) {
    double gap = 0.0;
    for (std::size_t x = 0; x < p.size(); ++x) {
      if ((mask >> x) & 1u) gap += p[x] - q[x];
    }
    best = std::max(best, std::abs(gap));
  }
  return best;
}

TEST(WitnessProperty, AttainsBruteForceMaximum) {
  RngStream rng(1, 4);
  for (int k = 0; k < 100; ++k) {
    const int n = k % 2 == 0 ? 2 : 3;
    const BornDistribution p = testing::random_distribution(n, rng);
    const BornDistribution q = testing::random_distribution(n, rng);
    const QueryFunction w = max_tv_witness(p, q);
    const double gap = std::abs(functional(p, w) - functional(q, w));
    const double tv = tv_distance(p, q);
    EXPECT_NEAR(gap, tv, 1e-12);
    EXPECT_NEAR(max_subset_gap(p, q), tv, 1e-12);
    for (std::size_t x = 0; x < p.size(); ++x) {
      EXPECT_EQ(w[x], p[x] > q[x] ? 1.0 : 0.0);
    }
  }
}

}  // namespace
}  // namespace sqlab
