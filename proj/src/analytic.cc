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

#include "sqlab/analytic.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "sqlab/error.h"

namespace sqlab {

MomentPattern MomentPattern::on_distinct_points(std::vector<int> exponents) {
  MomentPattern p;
  p.points.resize(exponents.size());
  std::iota(p.points.begin(), p.points.end(), std::uint64_t{0});
  p.exponents = std::move(exponents);
  return p;
}

int MomentPattern::order() const {
  return std::accumulate(exponents.begin(), exponents.end(), 0);
}

Rational haar_monomial(std::uint64_t dim, const MomentPattern& pattern) {
  if (pattern.exponents.size() != pattern.points.size()) {
    throw PreconditionError("moment pattern: exponents and points differ in length");
  }
  if (std::any_of(pattern.exponents.begin(), pattern.exponents.end(),
                  [](int l) { return l < 1; })) {
    throw PreconditionError("moment pattern: exponents must be positive");
  }
  std::vector<std::uint64_t> pts = pattern.points;
  std::sort(pts.begin(), pts.end());
  if (std::adjacent_find(pts.begin(), pts.end()) != pts.end()) {
    throw PreconditionError("moment pattern: repeated points");
  }
  const int t = pattern.order();
  if (dim == 0 || static_cast<std::uint64_t>(t) > dim) {
    throw PreconditionError("moment pattern: order t=" + std::to_string(t) +
                            " exceeds dimension " + std::to_string(dim));
  }
  BigInt num = 1;
  for (int lambda : pattern.exponents) {
    for (int j = 2; j <= lambda; ++j) num *= j;
  }
  BigInt den = 1;
  for (int j = 0; j < t; ++j) den *= BigInt(dim) + j;
  return Rational(num, den);
}

Rational haar_pair_moment(int n, bool x_equals_y) {
  if (n < 1) throw PreconditionError("haar_pair_moment: n must be >= 1");
  const BigInt d = BigInt(1) << n;
  return Rational(BigInt(x_equals_y ? 2 : 1), d * (d + 1));
}

BigInt gaussian_integration_constant(std::uint64_t dim, unsigned k) {
  if (dim == 0) throw PreconditionError("gaussian_integration_constant: D >= 1");
  // k! binom(D+k-1, k) = D (D+1) ... (D+k-1).
  BigInt out = BigInt(1) << k;
  for (unsigned j = 0; j < k; ++j) out *= BigInt(dim) + j;
  return out;
}

Interval haar_tv_window(int n) {
  if (n < 1) throw PreconditionError("haar_tv_window: n must be >= 1");
  const double half_width = std::exp2(-0.5 * n - 1.0);
  const double center = gaussian_M();
  return {center - half_width, center + half_width};
}

double haar_tv_expectation(double dim) {
  if (dim < 1.0) throw PreconditionError("haar_tv_expectation: D >= 1");
  return std::exp(dim * std::log1p(-1.0 / dim));
}

double gaussian_M() { return std::exp(-1.0); }

double gaussian_Delta_bound(double dim) {
  if (dim < 1.0) throw PreconditionError("gaussian_Delta_bound: D >= 1");
  return 0.5 / std::sqrt(dim);
}

double brickwork_moment_threshold(int n) {
  if (n < 1) throw PreconditionError("n must be >= 1");
  return std::log(static_cast<double>(n)) / std::log(1.25);
}

double brickwork_second_moment_formula(int n, int depth, bool x_equals_y) {
  if (n < 1 || depth < 0) throw PreconditionError("need n >= 1 and d >= 0");
  const double decay = std::exp(depth * std::log(0.8));
  const double log2_scale = -2.0 * n;
  return (x_equals_y ? 2.0 : 1.0) * (1.0 + n * decay) * std::exp2(log2_scale);
}

double brickwork_second_moment_bound(int n, int depth, bool x_equals_y) {
  const double threshold = brickwork_moment_threshold(n);
  if (depth < threshold) {
    throw RegimeError("bound regime violated: depth " + std::to_string(depth) +
                      " < log n / log(5/4) = " + std::to_string(threshold));
  }
  return brickwork_second_moment_formula(n, depth, x_equals_y);
}

StabilizerCensus clifford_counts(int n) {
  if (n < 1) throw PreconditionError("clifford_counts: n must be >= 1");
  StabilizerCensus c;
  c.n = n;
  c.total = BigInt(1) << n;
  for (int i = 1; i <= n; ++i) c.total *= (BigInt(1) << i) + 1;
  c.uniform_output = BigInt(1) << (n + n * (n + 1) / 2);
  c.ratio = Rational(c.uniform_output, c.total);
  return c;
}

double clifford_uniform_ratio_limit() {
  double prod = 1.0;
  for (int i = 1; i < 64; ++i) prod *= 1.0 + std::ldexp(1.0, -i);
  return 1.0 / prod;
}

}  // namespace sqlab
