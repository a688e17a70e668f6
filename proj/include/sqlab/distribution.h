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

#ifndef SQLAB_DISTRIBUTION_H_
#define SQLAB_DISTRIBUTION_H_

#include <cstdint>
#include <span>
#include <vector>

#include "sqlab/statevector.h"

namespace sqlab {

// Probability table over {0,1}^n, indexed like the statevector basis.
class BornDistribution {
 public:
  // Entries below -1e-12 or a total off by more than 1e-9 are rejected; tiny
  // negatives are clamped to zero.
  static BornDistribution from_probs(int n, std::vector<double> probs);
  // Rejects states whose norm deviates from 1 by more than 1e-6.
  static BornDistribution from_state(const Statevector& state);
  static BornDistribution uniform(int n);
  static BornDistribution point_mass(int n, std::uint64_t x);

  int num_qubits() const { return n_; }
  std::size_t size() const { return probs_.size(); }
  std::span<const double> probs() const { return probs_; }
  double operator[](std::size_t x) const { return probs_[x]; }

  friend bool operator==(const BornDistribution&,
                         const BornDistribution&) = default;

 private:
  BornDistribution(int n, std::vector<double> probs)
      : n_(n), probs_(std::move(probs)) {}

  int n_;
  std::vector<double> probs_;
};

inline BornDistribution born_distribution(const Statevector& state) {
  return BornDistribution::from_state(state);
}

// phi: {0,1}^n -> [-1, 1].
class QueryFunction {
 public:
  // Throws PreconditionError on a wrong length or an entry outside [-1, 1].
  QueryFunction(int n, std::vector<double> table);

  static QueryFunction constant(int n, double value);
  // 0/1 indicator of the given labels.
  static QueryFunction indicator(int n, std::span<const std::uint64_t> members);

  int num_qubits() const { return n_; }
  std::span<const double> table() const { return table_; }
  double operator[](std::size_t x) const { return table_[x]; }

  friend bool operator==(const QueryFunction&, const QueryFunction&) = default;

 private:
  int n_;
  std::vector<double> table_;
};

struct NormReport {
  double l1 = 0.0;
  double l2 = 0.0;
  double l4 = 0.0;
  // l2^3 / l4^2, with 0/0 := 0.
  double berger_lower = 0.0;
};

struct CollisionStats {
  double z = 0.0;  // sum P(x)^2
  double x = 0.0;  // sum P(x)^4
};

double tv_distance(const BornDistribution& p, const BornDistribution& q);
// Expectation P[phi] = sum_x P(x) phi(x).
double functional(const BornDistribution& p, const QueryFunction& phi);
NormReport norms_of_difference(const BornDistribution& p,
                               const BornDistribution& q);
CollisionStats collision_stats(const BornDistribution& p);
// Indicator of S = {x : P(x) > Q(x)}; |P[phi] - Q[phi]| = tv(P, Q).
QueryFunction max_tv_witness(const BornDistribution& p,
                             const BornDistribution& q);

}  // namespace sqlab

#endif  // SQLAB_DISTRIBUTION_H_
