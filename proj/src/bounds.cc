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

#include "sqlab/bounds.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "sqlab/error.h"

namespace sqlab {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kLn2 = std::numbers::ln2;

// Probability upper bound given log2 of the raw expression.
BoundResult probability_upper(double log2_raw) {
  BoundResult r;
  if (log2_raw >= 0.0) {
    r.value = 1.0;
    r.log2_value = 0.0;
    r.informative = false;
  } else {
    r.log2_value = log2_raw;
    r.value = std::exp2(log2_raw);
  }
  return r;
}

// Lower bound on a count (or on q + 1) given log2 of a positive expression;
// non-positive expressions are signalled with log2_raw = -inf.
BoundResult count_lower(double log2_raw) {
  BoundResult r;
  r.log2_value = log2_raw;
  if (log2_raw == kNegInf) {
    r.value = 0.0;
    r.informative = false;
  } else {
    r.value = log2_raw > 1023.0 ? kInf : std::exp2(log2_raw);
  }
  return r;
}

double safe_log2(double x) { return x > 0.0 ? std::log2(x) : kNegInf; }

void require(bool ok, const std::string& what) {
  if (!ok) throw PreconditionError(what);
}

double need(const std::optional<double>& v, const char* name) {
  if (!v) throw PreconditionError(std::string("missing parameter ") + name);
  return *v;
}

void finalize(BoundResult& r) {
  for (const Precondition& p : r.preconditions) {
    if (!p.satisfied) r.informative = false;
  }
}

}  // namespace

bool BoundResult::finite() const { return std::isfinite(value); }

std::optional<double> BoundResult::extra(const std::string& key) const {
  for (const auto& [k, v] : extras) {
    if (k == key) return v;
  }
  return std::nullopt;
}

double nine_pi_cubed() {
  return 9.0 * std::numbers::pi * std::numbers::pi * std::numbers::pi;
}

void BoundParams::validate() const {
  require(n >= 1, "n must be >= 1");
  if (d) require(*d >= 0, "d must be >= 0");
  auto open01 = [](const std::optional<double>& v, const char* name) {
    if (v) require(*v > 0.0 && *v < 1.0, std::string(name) + " must lie in (0, 1)");
  };
  open01(eps, "eps");
  open01(tau, "tau");
  if (beta) require(*beta > 0.0 && *beta <= 1.0, "beta must lie in (0, 1]");
  if (alpha) require(*alpha > 0.0 && *alpha <= 1.0, "alpha must lie in (0, 1]");
  if (delta) require(*delta > 0.0, "delta must be > 0");
  if (c) require(*c > 0.0, "c must be > 0");
  if (xi) require(*xi > 0.0, "xi must be > 0");
  if (lipschitz) require(*lipschitz > 0.0, "L must be > 0");
}

BoundResult levy_tail(double dim, double deviation, double lipschitz) {
  require(deviation > 0.0, "levy_tail: deviation must be > 0");
  require(lipschitz > 0.0, "levy_tail: L must be > 0");
  require(dim >= 1.0, "levy_tail: D must be >= 1");
  const double exponent =
      4.0 * dim * deviation * deviation / (nine_pi_cubed() * lipschitz * lipschitz);
  return probability_upper(1.0 - exponent / kLn2);
}

BoundResult haar_concentration(int n, ConcentrationKind kind, double deviation) {
  require(n >= 1, "haar_concentration: n must be >= 1");
  require(deviation > 0.0, "haar_concentration: deviation must be > 0");
  const double dim = std::exp2(n);
  if (kind == ConcentrationKind::kFrac) {
    BoundResult r = levy_tail(dim, deviation, 2.0);
    r.extras.emplace_back("radius", deviation);
    return r;
  }
  BoundResult r = levy_tail(dim, deviation, 1.0);
  r.extras.emplace_back("center", std::exp(-1.0));
  r.extras.emplace_back("radius", deviation + std::exp2(-0.5 * n - 1.0));
  return r;
}

BoundResult haar_query_bound(const BoundParams& p) {
  p.validate();
  const double eps = need(p.eps, "eps");
  const double tau = need(p.tau, "tau");
  const double beta = need(p.beta, "beta");
  const int n = p.n;
  const double xi = std::exp(-1.0) - std::exp2(-0.5 * n - 1.0) - eps - tau;
  require(xi >= 0.0,
          "haar_query_bound: need eps <= 1/e - 2^{-n/2-1} - tau");
  const double dim = std::exp2(n);
  const double ln_ball = std::log(2.0) - 4.0 * dim * xi * xi / nine_pi_cubed();
  const double ball = std::exp(ln_ball);
  const double numerator = beta - ball;
  // log2 of the frac denominator 2 exp(-2^n tau^2 / 9pi^3).
  const double log2_frac = 1.0 - dim * tau * tau / (nine_pi_cubed() * kLn2);
  BoundResult r = count_lower(numerator > 0.0 ? safe_log2(numerator) - log2_frac
                                              : kNegInf);
  r.extras.emplace_back("xi", xi);
  r.extras.emplace_back("ball_mass", ball);
  r.extras.emplace_back("log2_frac", log2_frac);
  r.preconditions.push_back({"eps <= 1/e - 2^{-n/2-1} - tau", true,
                             std::exp(-1.0) - std::exp2(-0.5 * n - 1.0) - tau,
                             ""});
  finalize(r);
  return r;
}

BoundResult frac_bound(int n, std::optional<int> d, double tau,
                       FracRegime regime, double delta) {
  require(n >= 1, "frac_bound: n must be >= 1");
  require(tau > 0.0, "frac_bound: tau must be > 0");
  const double log2_tau2 = 2.0 * std::log2(tau);
  BoundResult r;
  double threshold = 0.0;
  std::string threshold_name;
  double log2_raw = 0.0;
  switch (regime) {
    case FracRegime::kLinear: {
      require(n >= 2, "frac_bound(linear): n must be >= 2");
      require(delta > 0.0, "frac_bound(linear): delta must be > 0");
      threshold = 3.2 * ((2.0 + std::log(2.0)) * n + std::log(n) +
                         std::log(1.0 / delta));
      threshold_name = "d >= 3.2((2+ln2)n + ln n + ln(1/delta))";
      log2_raw = std::log2(2.0 + delta) - n - log2_tau2;
      break;
    }
    case FracRegime::kSublinear: {
      threshold = std::log(n) / std::log(1.25);
      threshold_name = "d >= log n / log(5/4)";
      if (!d) throw PreconditionError("frac_bound(sublinear): depth d is required");
      const double decay = std::exp(*d * std::log(0.8));
      const double inv_dim = std::exp2(-n);
      log2_raw = std::log2(n * decay * (1.0 + inv_dim) + inv_dim) - log2_tau2;
      break;
    }
    case FracRegime::kSublinearSimplified: {
      threshold = std::log(n) / std::log(1.25);
      threshold_name = "d >= log n / log(5/4)";
      if (!d) {
        throw PreconditionError("frac_bound(sublinear_simplified): depth d is required");
      }
      const double boundary = (n + std::log2(n)) / std::log2(1.25);
      r.extras.emplace_back("branch_boundary", boundary);
      if (*d > boundary) {
        r.extras.emplace_back("branch", 2.0);
        log2_raw = std::log2(3.0) - n - log2_tau2;
      } else {
        r.extras.emplace_back("branch", 1.0);
        log2_raw = std::log2(3.0 * n) + *d * std::log2(0.8) - log2_tau2;
      }
      break;
    }
  }
  if (d && *d < threshold) {
    throw RegimeError("frac_bound: depth " + std::to_string(*d) +
                      " below regime threshold " + std::to_string(threshold));
  }
  BoundResult out = probability_upper(log2_raw);
  out.extras = std::move(r.extras);
  out.extras.emplace_back("depth_threshold", threshold);
  out.preconditions.push_back(
      {threshold_name, true, threshold, d ? "checked" : "assumed (no depth given)"});
  finalize(out);
  return out;
}

BoundResult far_from_uniform_bound(int n, FarFromUniformMode mode,
                                   double parameter) {
  double radius = 0.0;
  double probability = 0.0;
  std::vector<Precondition> pre;
  switch (mode) {
    case FarFromUniformMode::kEightDesign:
      require(n >= 2, "far_from_uniform(eight_design): n must be >= 2");
      radius = 1.0 / 150.0;
      probability = 1.0 - 3200.0 * std::exp2(-n);
      pre.push_back({"approximate unitary 8-design (brickwork: d >= 1.2e20 n)",
                     true, 1.2e20 * n, "assumed"});
      break;
    case FarFromUniformMode::kFourDesign:
      require(n >= 2, "far_from_uniform(four_design): n must be >= 2");
      require(parameter > 0.0, "far_from_uniform(four_design): c must be > 0");
      radius = 1.0 / (20.0 * std::sqrt(parameter + 18.0));
      probability = 1.0 - 100.0 * std::exp2(-n) - 25.0 / parameter;
      pre.push_back({"approximate unitary 4-design", true, 0.0, "assumed"});
      break;
    case FarFromUniformMode::kMarkov:
      require(parameter >= 0.0 && parameter <= 0.25,
              "far_from_uniform(markov): eps must lie in [0, 1/4]");
      radius = parameter;
      probability = (0.25 - parameter) / (1.0 - parameter);
      pre.push_back({"n >= 2 and d >= 1", true, 2.0, "assumed"});
      break;
  }
  BoundResult r;
  r.informative = probability > 0.0;
  probability = std::clamp(probability, 0.0, 1.0);
  r.value = probability;
  r.log2_value = safe_log2(probability);
  r.extras.emplace_back("radius", radius);
  r.extras.emplace_back("probability", probability);
  r.preconditions = std::move(pre);
  finalize(r);
  return r;
}

BoundResult query_bound_generic(double beta, double ball_mass, double frac,
                                std::optional<double> alpha) {
  require(frac > 0.0, "query_bound_generic: frac must be > 0");
  require(frac <= 1.0, "query_bound_generic: frac must be <= 1");
  require(beta >= 0.0 && beta <= 1.0, "query_bound_generic: beta in [0, 1]");
  require(ball_mass >= 0.0 && ball_mass <= 1.0,
          "query_bound_generic: ball mass in [0, 1]");
  double prefactor = 1.0;
  if (alpha) {
    require(*alpha >= 0.0 && *alpha <= 1.0, "query_bound_generic: alpha in [0, 1]");
    prefactor = 2.0 * (*alpha - 0.5);
  }
  const double raw = prefactor * (beta - ball_mass) / frac;
  BoundResult r = count_lower(raw > 0.0 ? std::log2(raw) : kNegInf);
  if (raw > 0.0) r.value = raw;
  r.extras.emplace_back("prefactor", prefactor);
  return r;
}

BoundResult linear_query_bound(const BoundParams& p) {
  p.validate();
  const double tau = need(p.tau, "tau");
  const double beta = need(p.beta, "beta");
  if (p.eps) {
    require(*p.eps <= 1.0 / 150.0 - tau, "linear_query_bound: need eps <= 1/150 - tau");
  }
  const int n = p.n;
  const double ball = 3200.0 * std::exp2(-n);
  const double numerator = beta - ball;
  BoundResult r = count_lower(numerator > 0.0
                                  ? std::log2(numerator) + (n - 2) +
                                        2.0 * std::log2(tau)
                                  : kNegInf);
  const double depth_threshold = 1.2e20 * n;
  Precondition depth{"d >= 1.2e20 n", true, depth_threshold, "assumed"};
  if (p.d) {
    depth.satisfied = *p.d >= depth_threshold;
    depth.detail = "checked";
  }
  r.preconditions.push_back(depth);
  // Without eps only the existence of an admissible eps is checked.
  r.preconditions.push_back({"eps <= 1/150 - tau", p.eps || tau < 1.0 / 150.0,
                             1.0 / 150.0 - tau, p.eps ? "checked" : "no eps given"});
  r.extras.emplace_back("ball_mass", ball);
  finalize(r);
  return r;
}

BoundResult sublinear_query_bound(const BoundParams& p) {
  p.validate();
  const double eps = need(p.eps, "eps");
  const double tau = need(p.tau, "tau");
  const double beta = need(p.beta, "beta");
  if (!p.d) throw PreconditionError("sublinear_query_bound: depth d is required");
  require(eps <= 0.25 - tau, "sublinear_query_bound: need eps <= 1/4 - tau");
  const int n = p.n;
  const int d = *p.d;
  const double c = 1.0 / std::log2(1.25);
  const double lo = c * std::log2(n);
  const double hi = c * (n + std::log2(n));
  const double numerator = beta - 0.75 - eps - tau;
  const double log2_num = numerator > 0.0 ? std::log2(numerator) : kNegInf;
  const double log2_tau2 = 2.0 * std::log2(tau);
  BoundResult r;
  if (d > hi) {
    r = count_lower(log2_num == kNegInf ? kNegInf : log2_num + (n - 2) + log2_tau2);
    r.extras.emplace_back("branch", 2.0);
  } else {
    r = count_lower(log2_num == kNegInf
                        ? kNegInf
                        : log2_num + log2_tau2 - std::log2(3.0 * n) +
                              d * std::log2(1.25));
    r.extras.emplace_back("branch", 1.0);
    r.preconditions.push_back({"d >= c log2 n", d >= lo, lo, "c = 1/log2(5/4)"});
    r.notes.push_back(
        "growth factor evaluated as (5/4)^d, as implied by frac <= "
        "3n (4/5)^d / tau^2; a (4/5)^d factor would shrink the bound with depth");
  }
  r.extras.emplace_back("branch_lo", lo);
  r.extras.emplace_back("branch_hi", hi);
  r.preconditions.push_back({"eps <= 1/4 - tau", true, 0.25 - tau, ""});
  finalize(r);
  return r;
}

BoundResult far_from_fixed_bound(int n, double eps, std::optional<double> tau) {
  require(n >= 2, "far_from_fixed_bound: n must be >= 2");
  require(eps > 0.0 && eps <= 1.0 / 450.0,
          "far_from_fixed_bound: eps must lie in (0, 1/450]");
  BoundResult r = probability_upper(std::log2(607500.0) - n);
  r.extras.emplace_back("constant", 607500.0);
  r.extras.emplace_back("case_near_uniform", 3200.0 * std::exp2(-n));
  if (tau) {
    require(*tau > 0.0, "far_from_fixed_bound: tau must be > 0");
    r.extras.emplace_back("ball_bound",
                          std::min(1.0, 3.0 * std::exp2(-n) / (*tau * *tau)));
  }
  r.preconditions.push_back({"eps <= 1/450", true, 1.0 / 450.0, ""});
  r.preconditions.push_back({"linear depth d = O(n)", true, 0.0, "assumed"});
  r.notes.push_back(
      "evaluated with eps <= 1/450 and c = 607500; the looser pair "
      "eps <= 1/225, c < 7e6 is not derivable from the component bounds");
  finalize(r);
  return r;
}

double far_from_fixed_combine(double frac, double ball) {
  return std::max(frac, ball);
}

int design_min_qubits(int t) {
  const double l = std::log2(4.0 * t);
  return static_cast<int>(std::ceil(2.0 * l + 1.5 * std::sqrt(l)));
}

BoundResult design_depth_bound(int n, int t, double eps_design) {
  require(t >= 2, "design_depth_bound: t must be >= 2");
  require(n >= 1, "design_depth_bound: n must be >= 1");
  require(eps_design > 0.0, "design_depth_bound: eps must be > 0");
  const double log2_t = std::log2(static_cast<double>(t));
  const double log2_value = std::log2(1e13) + 5.0 * std::log2(std::log(t)) +
                            (4.0 + 3.0 / std::sqrt(log2_t)) * log2_t +
                            std::log2(2.0 * n * t + std::log2(1.0 / eps_design));
  BoundResult r = count_lower(log2_value);
  const int min_n = design_min_qubits(t);
  r.preconditions.push_back({"n >= ceil(2 log2(4t) + 1.5 sqrt(log2(4t)))",
                             n >= min_n, static_cast<double>(min_n), ""});
  finalize(r);
  return r;
}

FeldmanVariants feldman_variants(double beta, double alpha, double sup_ball,
                                 double frac) {
  require(frac > 0.0, "feldman_variants: frac must be > 0");
  for (double v : {beta, alpha, sup_ball, frac}) {
    require(v >= 0.0 && v <= 1.0, "feldman_variants: inputs must lie in [0, 1]");
  }
  auto make = [](double raw) {
    BoundResult r = count_lower(raw > 0.0 ? std::log2(raw) : kNegInf);
    if (raw > 0.0) r.value = raw;
    return r;
  };
  return {make((alpha * beta - sup_ball) / frac),
          make(2.0 * (alpha - 0.5) * (beta - sup_ball) / frac)};
}

}  // namespace sqlab
