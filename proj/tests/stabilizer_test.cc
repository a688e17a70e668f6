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

#include "sqlab/stabilizer.h"

#include <cmath>
#include <set>

#include "gtest/gtest.h"
#include "sqlab/analytic.h"
#include "sqlab/distribution.h"
#include "sqlab/error.h"

namespace sqlab {
namespace {

double overlap_abs(const Statevector& a, const Statevector& b) {
  Complex s = 0.0;
  for (std::size_t x = 0; x < a.dim(); ++x) s += std::conj(a[x]) * b[x];
  return std::abs(s);
}

TEST(Stabilizer, CountsMatchFormulas) {
  const int expected_total[] = {6, 60, 1080};
  const int expected_uniform[] = {4, 32, 512};
  for (int n = 1; n <= 3; ++n) {
    const StabilizerCensus c = census_by_enumeration(n);
    EXPECT_EQ(c.total, expected_total[n - 1]);
    EXPECT_EQ(c.uniform_output, expected_uniform[n - 1]);
    EXPECT_EQ(c.total, clifford_counts(n).total);
    EXPECT_EQ(c.uniform_output, clifford_counts(n).uniform_output);
    EXPECT_EQ(c.ratio, clifford_counts(n).ratio);
  }
}

TEST(Stabilizer, StatesAreNormalizedAndPairwiseDistinctRays) {
  const auto states = enumerate_stabilizer_states(2);
  ASSERT_EQ(states.size(), 60u);
  for (std::size_t i = 0; i < states.size(); ++i) {
    EXPECT_NEAR(states[i].norm(), 1.0, 1e-12);
    for (std::size_t j = i + 1; j < states.size(); ++j) {
      EXPECT_LT(overlap_abs(states[i], states[j]), 1.0 - 1e-6) << i << "," << j;
    }
  }
}

TEST(Stabilizer, OneQubitStatesAreThePauliEigenstates) {
  const auto states = enumerate_stabilizer_states(1);
  ASSERT_EQ(states.size(), 6u);
  const double r = 1.0 / std::sqrt(2.0);
  const std::vector<std::vector<Complex>> expected = {
      {1, 0}, {0, 1}, {r, r}, {r, -r}, {r, Complex(0, r)}, {r, Complex(0, -r)}};
  for (const auto& e : expected) {
    const Statevector target = Statevector::from_amplitudes(1, e);
    int hits = 0;
    for (const Statevector& s : states) hits += overlap_abs(s, target) > 1.0 - 1e-12;
    EXPECT_EQ(hits, 1);
  }
}

TEST(Stabilizer, AmplitudesAreFlatOnTheirSupport) {
  for (const Statevector& s : enumerate_stabilizer_states(3)) {
    std::size_t support = 0;
    for (std::size_t x = 0; x < s.dim(); ++x) support += std::abs(s[x]) > 1e-9;
    ASSERT_TRUE(support == 1 || support == 2 || support == 4 || support == 8);
    for (std::size_t x = 0; x < s.dim(); ++x) {
      if (std::abs(s[x]) > 1e-9) {
        ASSERT_NEAR(std::norm(s[x]), 1.0 / support, 1e-12);
      }
    }
  }
}

TEST(Stabilizer, BornDistributionsOfTwoQubitStates) {
  int uniform = 0, half = 0, point = 0;
  for (const Statevector& s : enumerate_stabilizer_states(2)) {
    const double tv = tv_distance(born_distribution(s), BornDistribution::uniform(2));
    if (tv < 1e-9) {
      ++uniform;
    } else if (std::abs(tv - 0.5) < 1e-9) {
      ++half;
    } else if (std::abs(tv - 0.75) < 1e-9) {
      ++point;
    }
  }
  EXPECT_EQ(uniform, 32);
  EXPECT_EQ(half + point, 28);
  EXPECT_EQ(point, 4);
}

TEST(Stabilizer, CanonicalPhase) {
  Statevector s = Statevector::from_amplitudes(
      1, {Complex(0.0, 0.0), Complex(0.0, -1.0)});
  canonicalize_global_phase(s);
  EXPECT_NEAR(std::abs(s[1] - Complex(1.0)), 0.0, 1e-15);
}

TEST(Stabilizer, RejectsLargeN) {
  EXPECT_THROW(enumerate_stabilizer_states(4), PreconditionError);
  EXPECT_THROW(enumerate_stabilizer_states(0), PreconditionError);
}

}  // namespace
}  // namespace sqlab
