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

#ifndef SQLAB_ANALYTIC_H_
#define SQLAB_ANALYTIC_H_

#include <cstdint>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace sqlab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Exponents lambda_l on distinct basis points x_l of a Haar monomial
// E[prod_l |<psi|x_l>|^(2 lambda_l)].
struct MomentPattern {
  std::vector<int> exponents;
  std::vector<std::uint64_t> points;

  // Points default to 0, 1, ..., k-1.
  static MomentPattern on_distinct_points(std::vector<int> exponents);
  int order() const;  // t = sum of exponents
};

// prod_l lambda_l! / (D (D+1) ... (D+t-1)). Requires t <= D and distinct
// points.
Rational haar_monomial(std::uint64_t dim, const MomentPattern& pattern);

// E_Haar[P(x) P(y)] = (1 + [x == y]) / (2^n (2^n + 1)).
Rational haar_pair_moment(int n, bool x_equals_y);

// k! 2^k binom(D + k - 1, k) = E[(chi^2_{2D})^k]: the normalizer that turns
// Gaussian moments into Haar moments.
BigInt gaussian_integration_constant(std::uint64_t dim, unsigned k);

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  bool contains(double v) const { return lo <= v && v <= hi; }
  double width() const { return hi - lo; }
};

// [1/e - 2^{-n/2-1}, 1/e + 2^{-n/2-1}]: contains E_Haar[d_TV(P, uniform)].
Interval haar_tv_window(int n);

// E_Haar[d_TV(P, uniform)] = (1 - 1/D)^D. Each output probability of a Haar
// state is Beta(1, D-1) distributed; integrating |p - 1/D| against that
// density gives the closed form.
double haar_tv_expectation(double dim);

// M = (1/2) E|(g^2 + h^2)/2 - 1| = 1/e.
double gaussian_M();
// Bound on (1/2) E|1 - chi^2_{2D}/(2D)|: 1/(2 sqrt(D)).
double gaussian_Delta_bound(double dim);

// Depth from which the restricted-depth second moment bound holds:
// log n / log(5/4) (base independent).
double brickwork_moment_threshold(int n);

// (1 + [x == y]) (1 + n (4/5)^d) / 2^{2n}, the upper bound on
// E_{brickwork}[P(x) P(y)]. Throws RegimeError when d is below
// brickwork_moment_threshold(n).
double brickwork_second_moment_bound(int n, int depth, bool x_equals_y);
// Same formula without the regime check.
double brickwork_second_moment_formula(int n, int depth, bool x_equals_y);

struct StabilizerCensus {
  int n = 0;
  BigInt total;           // |S_n| = 2^n prod_{i=1}^n (2^i + 1)
  BigInt uniform_output;  // states whose Born distribution is uniform
  Rational ratio;         // uniform_output / total
};

// Closed-form counts.
StabilizerCensus clifford_counts(int n);

// lim_{n->inf} 1 / prod_{i=1}^n (1 + 2^{-i}), evaluated to double precision.
double clifford_uniform_ratio_limit();

}  // namespace sqlab

#endif  // SQLAB_ANALYTIC_H_
