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


#include "sqlab/montecarlo.h"

#include <cmath>
#include <vector>

#include "gtest/gtest.h"
#include "sqlab/analytic.h"
#include "sqlab/error.h"
#include "test_util.h"

namespace sqlab {
namespace {

constexpr double kZ95 = 1.959964;

EnsembleSpec spec(EnsembleKind kind, int n, int depth, std::uint64_t seed) {
  EnsembleSpec s;
  s.kind = kind;
  s.n = n;
  s.depth = depth;
  s.seed = seed;
  return s;
}

QueryFunction random_query(int n, std::uint64_t seed) {
  RngStream rng(seed, 99);
  std::vector<double> t(std::size_t{1} << n);
  for (double& v : t) v = 2.0 * rng.uniform() - 1.0;
  return QueryFunction(n, std::move(t));
}

TEST(Estimate, BitIdenticalAcrossWorkers) {
  const EnsembleSpec s = spec(EnsembleKind::kBrickwork, 6, 3, 42);
  const EstimateResult one = estimate_tail(s, Observable::tv_to_uniform(), 0.3, 400, 1);
  for (int w : {2, 8}) {
    const EstimateResult r = estimate_tail(s, Observable::tv_to_uniform(), 0.3, 400, w);
    EXPECT_EQ(r.mean, one.mean);
    EXPECT_EQ(r.variance, one.variance);
    EXPECT_EQ(r.stderr_, one.stderr_);
    EXPECT_EQ(r.samples, one.samples);
    EXPECT_EQ(r.tail->hits, one.tail->hits);
    EXPECT_EQ(r.workers, w);
  }
}

TEST(Estimate, SeedAndExperimentChangeStreams) {
  const EnsembleSpec a = spec(EnsembleKind::kHaarState, 3, 0, 1);
  const EnsembleSpec b = spec(EnsembleKind::kHaarState, 3, 0, 2);
  const auto ra = estimate_expectation(a, Observable::collision_z(), 50);
  EXPECT_EQ(ra.samples, estimate_expectation(a, Observable::collision_z(), 50).samples);
  EXPECT_NE(ra.samples, estimate_expectation(b, Observable::collision_z(), 50).samples);
  EXPECT_NE(ra.samples,
            estimate_expectation(a, Observable::collision_z(), 50, 1, "other").samples);
}

TEST(Estimate, BrickworkDepthZeroIsPointMass) {
  for (int n : {2, 4, 6}) {
    const auto r = estimate_expectation(spec(EnsembleKind::kBrickwork, n, 0, 3),
                                        Observable::tv_to_uniform(), 20);
    EXPECT_NEAR(r.mean, 1.0 - std::exp2(-n), 1e-12);
    EXPECT_NEAR(r.variance, 0.0, 1e-24);
  }
}

TEST(Estimate, CollisionMatchesHaarMoment) {
  const auto r = estimate_expectation(spec(EnsembleKind::kHaarState, 6, 0, 5),
                                      Observable::collision_z(), 20000);
  EXPECT_NEAR(r.mean, 2.0 / 65.0, 4.0 * r.stderr_);
  const auto u = estimate_expectation(spec(EnsembleKind::kHaarUnitary, 4, 0, 5),
                                      Observable::collision_z(), 5000);
  EXPECT_NEAR(u.mean, 2.0 / 17.0, 4.0 * u.stderr_);
}

TEST(Estimate, MonomialMatchesExact) {
  const MomentPattern pat = MomentPattern::on_distinct_points({2, 1});
  const double exact = haar_monomial(8, pat).convert_to<double>();
  const auto r = estimate_expectation(spec(EnsembleKind::kHaarState, 3, 0, 8),
                                      Observable::monomial(pat), 20000);
  EXPECT_NEAR(r.mean, exact, 4.0 * r.stderr_);
}

TEST(Estimate, StabilizerEnumIsExact) {
  const EnsembleSpec s = spec(EnsembleKind::kStabilizerEnum, 2, 0, 0);
  const auto r = estimate_tail(s, Observable::tv_to_uniform(), 0.25, 100);
  EXPECT_TRUE(r.exact);
  EXPECT_EQ(r.trials, 60u);
  EXPECT_EQ(r.tail->hits, 28u);
  EXPECT_NEAR(r.tail->probability, 28.0 / 60.0, 1e-15);
  // 4 point masses at 3/4, 24 other non-uniform states at 1/2.
  EXPECT_NEAR(r.mean, 0.25, 1e-14);
}

TEST(Estimate, ThresholdZeroIsCertain) {
  const auto r = estimate_tail(spec(EnsembleKind::kHaarState, 3, 0, 4),
                               Observable::tv_to_uniform(), 0.0, 200);
  EXPECT_EQ(r.tail->hits, 200u);
  EXPECT_EQ(r.tail->probability, 1.0);
  const auto s = estimate_tail(spec(EnsembleKind::kBrickwork, 2, 0, 4),
                               Observable::tv_to_uniform(), 0.75, 100, 1, true);
  EXPECT_EQ(s.tail->hits, 0u);
}

TEST(Estimate, Preconditions) {
  const EnsembleSpec s = spec(EnsembleKind::kHaarState, 3, 0, 1);
  EXPECT_THROW(estimate_expectation(s, Observable::tv_to_uniform(), 1), PreconditionError);
  EXPECT_THROW(estimate_tail(s, Observable::tv_to_uniform(), 0.1, 99), PreconditionError);
  EXPECT_THROW(estimate_expectation(s, Observable::functional(QueryFunction::constant(2, 1)), 10),
               PreconditionError);
  EXPECT_THROW(estimate_expectation(spec(EnsembleKind::kBrickwork, 3, 1, 1),
                                    Observable::tv_to_uniform(), 10),
               PreconditionError);
  EXPECT_THROW(Observable::monomial(MomentPattern{{1}, {8}}).check_compatible(3),
               PreconditionError);
}

TEST(Wilson, MatchesFormula) {
  auto oracle = [](double k, double n) {
    const double z2 = kZ95 * kZ95;
    const double p = k / n;
    const double c = (p + z2 / (2 * n)) / (1 + z2 / n);
    const double h = kZ95 * std::sqrt(p * (1 - p) / n + z2 / (4 * n * n)) / (1 + z2 / n);
    return std::pair{std::max(0.0, c - h), std::min(1.0, c + h)};
  };
  for (auto [k, n] : {std::pair{0, 10}, {5, 10}, {10, 10}, {37, 1000}, {1, 3}}) {
    const auto w = wilson_interval(k, n);
    const auto o = oracle(k, n);
    // The library uses the unrounded quantile.
    EXPECT_NEAR(w.first, o.first, 1e-8);
    EXPECT_NEAR(w.second, o.second, 1e-8);
  }
  EXPECT_NEAR(wilson_interval(0, 10).second, kZ95 * kZ95 / (10 + kZ95 * kZ95), 1e-8);
}

TEST(Gaussian, Identities) {
  const auto m = gaussian_identity_check(GaussianIdentity::kM, 1, 200000, 3, 1, 0.005);
  EXPECT_TRUE(m.passed);
  EXPECT_NEAR(m.target, std::exp(-1.0), 1e-15);
  const auto d = gaussian_identity_check(GaussianIdentity::kDelta, 16, 20000, 3);
  EXPECT_TRUE(d.passed);
  EXPECT_NEAR(d.target, 0.125, 1e-15);
  EXPECT_THROW(gaussian_identity_check(GaussianIdentity::kM, 1, 100, 3), PreconditionError);
  EXPECT_THROW(gaussian_identity_check(GaussianIdentity::kDelta, 0, 20000, 3),
               PreconditionError);
}

TEST(Lipschitz, OrthogonalBasisPair) {
  const std::uint64_t zero[] = {0};
  const QueryFunction phi = QueryFunction::indicator(1, zero);
  const auto r = lipschitz_ratios(Statevector::basis(1, 0), Statevector::basis(1, 1), phi);
  ASSERT_TRUE(r.has_value());
  EXPECT_NEAR(r->first, 1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(r->second, 0.0, 1e-15);
  EXPECT_FALSE(lipschitz_ratios(Statevector::basis(1, 0), Statevector::basis(1, 0), phi));
}

TEST(Lipschitz, ProbeWithinConstants) {
  for (int n = 2; n <= 5; ++n) {
    const auto p = lipschitz_probe(n, random_query(n, n), 2000, 17, 0.05);
    EXPECT_EQ(p.pairs + p.skipped, 4000u);
    EXPECT_LE(p.max_ratio_quadratic, 2.0);
    EXPECT_LE(p.max_ratio_tv, 1.0);
  }
  EXPECT_THROW(lipschitz_probe(2, random_query(3, 1), 10, 1), PreconditionError);
}

TEST(Variance, AssembledBoundMatchesDoubleSum) {
  for (int n : {4, 6}) {
    const QueryFunction phi = random_query(n, 100 + n);
    const double d2 = std::exp2(-2 * n);
    for (int depth : {10, 20}) {
      double sum = 0.0;
      for (std::size_t x = 0; x < phi.table().size(); ++x) {
        for (std::size_t y = 0; y < phi.table().size(); ++y) {
          sum += std::abs(phi[x] * phi[y]) *
                 (brickwork_second_moment_formula(n, depth, x == y) - d2);
        }
      }
      EXPECT_NEAR(assembled_variance_bound(n, depth, phi), sum, 1e-12 * std::abs(sum));
    }
  }
}

TEST(Variance, HaarClosedForm) {
  for (int n : {1, 3, 6}) {
    const QueryFunction phi = random_query(n, 200 + n);
    const double dim = std::exp2(n);
    double s = 0.0, s2 = 0.0;
    for (double v : phi.table()) {
      s += v;
      s2 += v * v;
    }
    const double want = (dim * s2 - s * s) / (dim * dim * (dim + 1));
    EXPECT_NEAR(haar_assembled_variance(phi), want, 1e-12 * want);
  }
}

TEST(Variance, ConstantPhiHasNoVariance) {
  const auto v = variance_vs_design_check(4, 10, QueryFunction::constant(4, 0.7), 1000, 5);
  EXPECT_LE(v.empirical_variance, 1e-28);
  EXPECT_NEAR(v.mean, 0.7, 1e-14);
}

TEST(Variance, RegimeAndDepthTrend) {
  const QueryFunction phi = random_query(6, 6);
  EXPECT_THROW(variance_vs_design_check(6, 4, phi, 1000, 1), RegimeError);
  const auto shallow = variance_vs_design_check(6, 2, phi, 3000, 1, 1, false);
  const auto deep = variance_vs_design_check(6, 30, phi, 3000, 1, 1, false);
  EXPECT_FALSE(shallow.regime_valid);
  EXPECT_TRUE(deep.regime_valid);
  EXPECT_TRUE(deep.below_bound);
  EXPECT_TRUE(deep.matches_haar);
  EXPECT_GE(shallow.empirical_variance,
            deep.empirical_variance - 4.0 * (shallow.variance_stderr + deep.variance_stderr));
  double prev = assembled_variance_bound(6, 9, phi);
  for (int d = 10; d <= 40; ++d) {
    const double b = assembled_variance_bound(6, d, phi);
    EXPECT_LE(b, prev);
    prev = b;
  }
  EXPECT_THROW(variance_vs_design_check(6, 10, phi, 999, 1), PreconditionError);
}

}  // namespace
}  // namespace sqlab
