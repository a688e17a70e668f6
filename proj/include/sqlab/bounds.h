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

#ifndef SQLAB_BOUNDS_H_
#define SQLAB_BOUNDS_H_

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sqlab {

// Calculators for the probability and query-count bounds on learning random
// circuit output distributions from statistical queries. Exponentials are
// evaluated in log space; magnitudes beyond double range are carried in
// log2_value only (value is then +inf).

struct Precondition {
  std::string name;
  bool satisfied = true;
  double threshold = 0.0;
  std::string detail;
};

struct BoundResult {
  double value = 0.0;
  double log2_value = 0.0;  // -inf when value == 0
  // False when the result was clamped to a vacuous 0 or 1, or a reported
  // precondition fails.
  bool informative = true;
  std::vector<Precondition> preconditions;
  // Auxiliary named outputs (radius, selected branch, raw values, ...).
  std::vector<std::pair<std::string, double>> extras;
  std::vector<std::string> notes;

  bool finite() const;
  std::optional<double> extra(const std::string& key) const;
};

// 9 pi^3
double nine_pi_cubed();

// Inputs shared by the query-count calculators. Unused fields stay empty.
struct BoundParams {
  int n = 0;
  std::optional<int> d;
  std::optional<double> eps;
  std::optional<double> tau;
  std::optional<double> beta;
  std::optional<double> alpha;
  std::optional<double> delta;
  std::optional<double> c;
  std::optional<double> xi;
  std::optional<double> lipschitz;

  // Range checks on whichever fields are set; throws PreconditionError.
  void validate() const;
};

// 2 exp(-4 D tau^2 / (9 pi^3 L^2)), clamped to 1.
BoundResult levy_tail(double dim, double deviation, double lipschitz);

enum class ConcentrationKind { kFrac, kTv };

// kFrac: Pr[|P_U[phi] - U[phi]| > tau] <= 2 exp(-2^n tau^2 / 9pi^3).
// kTv:   Pr[|d_TV(P_U, U) - 1/e| > xi + 2^{-n/2-1}] <= 2 exp(-2^{n+2} xi^2 / 9pi^3);
//        the radius xi + 2^{-n/2-1} is reported as extra "radius".
BoundResult haar_concentration(int n, ConcentrationKind kind, double deviation);

// Haar-random unitaries: q + 1 >= (beta - 2exp(-2^{n+2} xi^2/9pi^3)) /
// (2 exp(-2^n tau^2 / 9pi^3)) with xi = 1/e - 2^{-n/2-1} - eps - tau.
// Needs n, eps, tau, beta.
BoundResult haar_query_bound(const BoundParams& p);

enum class FracRegime { kLinear, kSublinear, kSublinearSimplified };

// Maximally distinguishable fraction against uniform for brickwork circuits.
//  kLinear:     (2 + delta) / (2^n tau^2), valid for
//               d >= 3.2((2 + ln 2) n + ln n + ln(1/delta)).
//  kSublinear:  (1/tau^2)[n (4/5)^d (1 + 2^-n) + 2^-n], valid for
//               d >= log n / log(5/4).
//  kSublinearSimplified: 3n(4/5)^d/tau^2 for d <= (n + log2 n)/log2(5/4),
//               else 3/(2^n tau^2).
// When d is given and below the regime threshold, RegimeError is thrown; when
// d is absent the threshold is reported and the bound assumes it holds.
BoundResult frac_bound(int n, std::optional<int> d, double tau,
                       FracRegime regime, double delta = 1.0);

enum class FarFromUniformMode { kEightDesign, kFourDesign, kMarkov };

// Lower bounds on Pr[d_TV(P_U, U) >= radius]. Extras: "radius",
// "probability".
//  kEightDesign: radius 1/150, probability 1 - 3200 * 2^-n (n >= 2).
//  kFourDesign:  radius 1/(20 sqrt(c + 18)), probability 1 - 100*2^-n - 25/c.
//  kMarkov:      radius eps, probability (1/4 - eps)/(1 - eps), eps in [0,1/4].
BoundResult far_from_uniform_bound(int n, FarFromUniformMode mode,
                                   double parameter = 0.0);

// q + 1 >= prefactor (beta - ball_mass) / frac, prefactor 1 when alpha is
// absent and 2(alpha - 1/2) otherwise.
BoundResult query_bound_generic(double beta, double ball_mass, double frac,
                                std::optional<double> alpha = std::nullopt);

// Linear depth: q + 1 >= (beta - 3200 * 2^-n) 2^{n-2} tau^2. The depth
// requirement d >= 1.2e20 n is reported, never enforced. Needs n, tau, beta;
// eps is optional and, when given, must satisfy eps <= 1/150 - tau.
BoundResult linear_query_bound(const BoundParams& p);

// Sublinear depth with c = 1/log2(5/4):
//  c log2 n <= d <= c (n + log2 n): q + 1 >= (beta - 3/4 - eps - tau) tau^2
//                                    / (3n) * (5/4)^d
//  d > c (n + log2 n):               q + 1 >= (beta - 3/4 - eps - tau) 2^{n-2} tau^2
// The first branch grows as (5/4)^d, following frac <= 3n (4/5)^d / tau^2.
// Needs n, d, eps, tau, beta.
BoundResult sublinear_query_bound(const BoundParams& p);

// Pr[d_TV(P_U, D) < eps] < 607500 * 2^-n for every fixed D, eps <= 1/450.
// When tau is given, also reports the single-case ball bound 3/(2^n tau^2)
// (valid for D with d_TV(D, U) > eps + tau) as extra "ball_bound".
BoundResult far_from_fixed_bound(int n, double eps,
                                 std::optional<double> tau = std::nullopt);

// max{frac, ball}: the combination used when D may or may not be close to the
// reference.
double far_from_fixed_combine(double frac, double ball);

// Brickwork depth for an eps-approximate unitary t-design:
// C ln^5(t) t^{4 + 3/sqrt(log2 t)} (2nt + log2(1/eps)), C = 1e13, valid for
// n >= ceil(2 log2(4t) + 1.5 sqrt(log2(4t))) (reported).
BoundResult design_depth_bound(int n, int t, double eps_design);
int design_min_qubits(int t);

struct FeldmanVariants {
  BoundResult alpha_beta;  // q >= (alpha beta - sup_ball) / frac
  BoundResult beta_tight;  // q >= 2 (alpha - 1/2)(beta - sup_ball) / frac
};
FeldmanVariants feldman_variants(double beta, double alpha, double sup_ball,
                                 double frac);

}  // namespace sqlab

#endif  // SQLAB_BOUNDS_H_
