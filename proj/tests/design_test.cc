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

#include "sqlab/design.h"

#include <algorithm>
#include <numeric>

#include "gtest/gtest.h"
#include "sqlab/error.h"
#include "sqlab/stabilizer.h"
#include "test_util.h"

namespace sqlab {
namespace {

// || avg (|psi><psi|)^{(x)t} - P_sym / binom(D+t-1, t) ||_1 evaluated in the
// full D^t space, with P_sym the average of all t! tensor-factor permutations.
double full_space_deviation(const std::vector<Statevector>& states, int t) {
  const std::size_t dim = states.front().dim();
  std::size_t big = 1;
  for (int k = 0; k < t; ++k) big *= dim;
  auto digits = [&](std::size_t idx) {
    std::vector<std::size_t> d(t);
    for (int k = 0; k < t; ++k) {
      d[k] = idx % dim;
      idx /= dim;
    }
    return d;
  };
  auto index_of = [&](const std::vector<std::size_t>& d) {
    std::size_t idx = 0;
    for (int k = t - 1; k >= 0; --k) idx = idx * dim + d[k];
    return idx;
  };

  Eigen::MatrixXcd psym = Eigen::MatrixXcd::Zero(big, big);
  std::vector<int> perm(t);
  std::iota(perm.begin(), perm.end(), 0);
  double count = 0.0;
  do {
    for (std::size_t col = 0; col < big; ++col) {
      const auto d = digits(col);
      std::vector<std::size_t> permuted(t);
      for (int k = 0; k < t; ++k) permuted[perm[k]] = d[k];
      psym(index_of(permuted), col) += 1.0;
    }
    count += 1.0;
  } while (std::next_permutation(perm.begin(), perm.end()));
  psym /= count;

  Eigen::MatrixXcd avg = Eigen::MatrixXcd::Zero(big, big);
  for (const Statevector& s : states) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Ones(1);
    for (int k = 0; k < t; ++k) {
      Eigen::VectorXcd next(v.size() * dim);
      for (std::size_t a = 0; a < dim; ++a) {
        next.segment(a * v.size(), v.size()) = s[a] * v;
      }
      v = next;
    }
    avg += v * v.adjoint();
  }
  avg /= static_cast<double>(states.size());
  const double trace = psym.trace().real();
  const Eigen::MatrixXcd diff = avg - psym / trace;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(diff);
  return es.eigenvalues().cwiseAbs().sum();
}

TEST(SymmetricDimension, Binomials) {
  EXPECT_EQ(symmetric_dimension(2, 1), 2u);
  EXPECT_EQ(symmetric_dimension(4, 2), 10u);
  EXPECT_EQ(symmetric_dimension(4, 4), 35u);
  EXPECT_EQ(symmetric_dimension(8, 3), 120u);
}

TEST(SymmetricPower, PreservesNorm) {
  RngStream rng(1, 1);
  for (int t = 1; t <= 4; ++t) {
    const Statevector s = testing::random_state(2, rng);
    EXPECT_NEAR(symmetric_power(s.amplitudes(), t).norm(), 1.0, 1e-12);
  }
}

TEST(TraceNorm, Diagonal) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(3, 3);
  m(0, 0) = 0.5;
  m(1, 1) = -0.25;
  m(2, 2) = 0.0;
  EXPECT_NEAR(trace_norm_hermitian(m), 0.75, 1e-15);
}

TEST(Design, MatchesFullSpaceOracleOnStabilizers) {
  for (int n : {1, 2}) {
    const auto states = enumerate_stabilizer_states(n);
    for (int t = 1; t <= (n == 1 ? 5 : 4); ++t) {
      const double lib = state_design_deviation(states, t).deviation;
      const double oracle = full_space_deviation(states, t);
      EXPECT_NEAR(lib, oracle, 1e-10) << "n=" << n << " t=" << t;
    }
  }
}

TEST(Design, MatchesFullSpaceOracleOnRandomSets) {
  RngStream rng(2, 2);
  for (int trial = 0; trial < 6; ++trial) {
    const int n = 1 + trial % 2;
    const int t = 2 + trial % 3;
    std::vector<Statevector> states;
    for (int k = 0; k < 5; ++k) states.push_back(testing::random_state(n, rng));
    EXPECT_NEAR(state_design_deviation(states, t).deviation,
                full_space_deviation(states, t), 1e-10);
  }
}

TEST(Design, StabilizersAreExactlyAThreeDesign) {
  const EnsembleSpec spec{EnsembleKind::kStabilizerEnum, 2, 0, 0};
  for (int t = 1; t <= 3; ++t) {
    const DesignDeviationReport r = state_design_deviation(spec, t, 0);
    EXPECT_TRUE(r.exact);
    EXPECT_EQ(r.trials, 60u);
    EXPECT_LT(r.deviation, 1e-10) << t;
  }
  EXPECT_GT(state_design_deviation(spec, 4, 0).deviation, 1e-3);
}

TEST(Design, HaarFirstMomentConverges) {
  const EnsembleSpec spec{EnsembleKind::kHaarState, 1, 0, 5};
  const DesignDeviationReport r = state_design_deviation(spec, 1, 100000);
  EXPECT_FALSE(r.exact);
  EXPECT_LT(r.deviation, 0.02);
  EXPECT_GT(r.stderr_estimate, 0.0);
}

TEST(Design, SampledDeviationShrinksWithTrials) {
  const EnsembleSpec spec{EnsembleKind::kHaarState, 2, 0, 6};
  const double small = state_design_deviation(spec, 2, 200).deviation;
  const double large = state_design_deviation(spec, 2, 20000).deviation;
  EXPECT_LT(large, small);
}

TEST(Design, WorkerCountDoesNotChangeResult) {
  const EnsembleSpec spec{EnsembleKind::kBrickwork, 2, 3, 7};
  const double one = state_design_deviation(spec, 2, 1000, 1).deviation;
  for (int w : {2, 8}) EXPECT_EQ(state_design_deviation(spec, 2, 1000, w).deviation, one);
}

TEST(Design, RejectsOversizedProblems) {
  const EnsembleSpec spec{EnsembleKind::kHaarState, 4, 0, 0};
  EXPECT_THROW(state_design_deviation(spec, 4, 10), PreconditionError);
  EXPECT_THROW(state_design_deviation(spec, 0, 10), PreconditionError);
}

}  // namespace
}  // namespace sqlab
