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

#include "sqlab/acceptance.h"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "sqlab/analytic.h"
#include "sqlab/bounds.h"
#include "sqlab/design.h"
#include "sqlab/distribution.h"
#include "sqlab/ensemble.h"
#include "sqlab/error.h"
#include "sqlab/montecarlo.h"
#include "sqlab/rng.h"
#include "sqlab/sq.h"
#include "sqlab/stabilizer.h"

namespace sqlab {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::uint64_t criterion_seed(const AcceptanceOptions& o, int id) {
  return mix64(o.seed ^ (0x5157ull << 32 | static_cast<std::uint64_t>(id)));
}

std::string fmt(const char* pattern, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof(buf), pattern, args...);
  return buf;
}

CriterionResult make_result(int id, std::string title) {
  CriterionResult r;
  r.id = id;
  r.title = std::move(title);
  return r;
}

QueryFunction random_query(int n, std::uint64_t seed, const char* tag) {
  RngStream rng(seed, hash_name(tag));
  std::vector<double> table(std::size_t{1} << n);
  for (double& v : table) v = 2.0 * rng.uniform() - 1.0;
  return QueryFunction(n, std::move(table));
}

CriterionResult haar_tv(const AcceptanceOptions& o) {
  CriterionResult r = make_result(1, "Haar TV expectation");
  const int n = 10;
  const double dim = 1024.0;
  EnsembleSpec spec{EnsembleKind::kHaarState, n, 0, criterion_seed(o, 1)};
  const EstimateResult e = estimate_expectation(
      spec, Observable::tv_to_uniform(), 2000, o.workers, "acceptance/haar_tv");
  const Interval w = haar_tv_window(n);
  const double slack = 3.0 * e.stderr_;
  const bool in_window = e.mean >= w.lo - slack && e.mean <= w.hi + slack;
  const double dirichlet = haar_tv_expectation(dim);
  const bool matches = std::abs(e.mean - dirichlet) <= slack;
  const bool fast = e.elapsed_seconds < 30.0;
  r.passed = in_window && matches && fast;
  r.detail = fmt("mean=%.6f stderr=%.2e window=[%.6f,%.6f]+-3se dirichlet=%.6f",
                 e.mean, e.stderr_, w.lo, w.hi, dirichlet);
  r.data = {{"mean", e.mean},          {"stderr", e.stderr_},
            {"window_lo", w.lo},       {"window_hi", w.hi},
            {"dirichlet", dirichlet},  {"in_window", in_window},
            {"matches_dirichlet", matches}, {"under_30s", fast}};
  return r;
}

CriterionResult gaussian(const AcceptanceOptions& o) {
  CriterionResult r = make_result(2, "Gaussian integration");
  const auto start = Clock::now();
  const GaussianCheck m = gaussian_identity_check(
      GaussianIdentity::kM, 1, 1000000, criterion_seed(o, 2), o.workers, 0.002);
  const GaussianCheck d = gaussian_identity_check(
      GaussianIdentity::kDelta, 1024, 100000, criterion_seed(o, 2), o.workers);
  const double elapsed = seconds_since(start);
  r.passed = m.passed && d.passed && elapsed < 10.0;
  r.detail = fmt("M=%.6f (1/e=%.6f, tol 0.002) Delta(1024)=%.6f <= %.6f+3se",
                 m.estimate.mean, m.target, d.estimate.mean, d.target);
  r.data = {{"M", m.estimate.mean},          {"M_target", m.target},
            {"M_passed", m.passed},          {"Delta", d.estimate.mean},
            {"Delta_stderr", d.estimate.stderr_}, {"Delta_bound", d.target},
            {"Delta_passed", d.passed},      {"under_10s", elapsed < 10.0}};
  return r;
}

Rational rising_factorial_inverse(std::uint64_t dim, int t) {
  BigInt den = 1;
  for (int i = 0; i < t; ++i) den *= dim + static_cast<std::uint64_t>(i);
  return Rational(1, den);
}

BigInt factorial(int k) {
  BigInt f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

bool symbolic_moments_hold(std::string& failure) {
  const std::vector<std::vector<int>> patterns = {
      {1}, {2}, {3}, {4}, {1, 1}, {2, 1}, {1, 1, 1}, {2, 2}, {3, 1},
      {2, 1, 1}, {1, 1, 1, 1}};
  for (std::uint64_t dim = 1; dim <= 1024; ++dim) {
    for (const auto& exps : patterns) {
      if (exps.size() > dim) continue;
      const MomentPattern p = MomentPattern::on_distinct_points(exps);
      const int t = p.order();
      if (static_cast<std::uint64_t>(t) > dim) continue;
      Rational expected = rising_factorial_inverse(dim, t);
      for (int e : exps) expected *= factorial(e);
      if (haar_monomial(dim, p) != expected) {
        failure = "haar_monomial mismatch at D=" + std::to_string(dim);
        return false;
      }
    }
    if (dim >= 4) {
      Rational scaled = haar_monomial(dim, MomentPattern::on_distinct_points({1, 1, 1, 1}));
      scaled *= Rational(gaussian_integration_constant(dim, 4), 16);
      if (scaled != 1) {
        failure = "integration constant identity fails at D=" + std::to_string(dim);
        return false;
      }
    }
  }
  for (int n = 1; n <= 10; ++n) {
    const BigInt dim = BigInt(1) << n;
    if (haar_pair_moment(n, true) != Rational(2, dim * (dim + 1)) ||
        haar_pair_moment(n, false) != Rational(1, dim * (dim + 1))) {
      failure = "haar_pair_moment mismatch at n=" + std::to_string(n);
      return false;
    }
  }
  return true;
}

CriterionResult moments(const AcceptanceOptions& o) {
  CriterionResult r = make_result(3, "Moment formulas");
  bool mc_ok = true;
  double worst_z = 0.0;
  Json per_n = Json::array();
  for (int n = 2; n <= 8; ++n) {
    const double dim = std::ldexp(1.0, n);
    EnsembleSpec spec{EnsembleKind::kHaarState, n, 0, criterion_seed(o, 3) + n};
    const EstimateResult same = estimate_expectation(
        spec, Observable::monomial({{2}, {0}}), 10000, o.workers,
        "acceptance/moment_xx");
    const EstimateResult diff = estimate_expectation(
        spec, Observable::monomial({{1, 1}, {0, 1}}), 10000, o.workers,
        "acceptance/moment_xy");
    const double t_same = 2.0 / (dim * (dim + 1.0));
    const double t_diff = 1.0 / (dim * (dim + 1.0));
    const double z_same = std::abs(same.mean - t_same) / same.stderr_;
    const double z_diff = std::abs(diff.mean - t_diff) / diff.stderr_;
    worst_z = std::max({worst_z, z_same, z_diff});
    mc_ok = mc_ok && z_same <= 4.0 && z_diff <= 4.0;
    per_n.push_back({{"n", n}, {"E_xx", same.mean}, {"E_xy", diff.mean},
                     {"z_xx", z_same}, {"z_xy", z_diff}});
  }
  std::string failure;
  const bool symbolic = symbolic_moments_hold(failure);
  r.passed = mc_ok && symbolic;
  r.detail = fmt("worst |z|=%.2f over n=2..8 (limit 4); symbolic identities %s",
                 worst_z, symbolic ? "exact" : failure.c_str());
  r.data = {{"per_n", per_n}, {"worst_z", worst_z}, {"symbolic", symbolic}};
  return r;
}

CriterionResult census(const AcceptanceOptions&) {
  CriterionResult r = make_result(4, "Stabilizer census");
  const auto start = Clock::now();
  const int expected[3][2] = {{6, 4}, {60, 32}, {1080, 512}};
  bool ok = true;
  Json rows = Json::array();
  std::string counts;
  for (int n = 1; n <= 3; ++n) {
    const StabilizerCensus bfs = census_by_enumeration(n);
    const StabilizerCensus formula = clifford_counts(n);
    const bool row_ok = bfs.total == expected[n - 1][0] &&
                        bfs.uniform_output == expected[n - 1][1] &&
                        formula.total == bfs.total &&
                        formula.uniform_output == bfs.uniform_output;
    ok = ok && row_ok;
    rows.push_back({{"n", n}, {"total", bfs.total.str()},
                    {"uniform", bfs.uniform_output.str()}, {"match", row_ok}});
    counts += "(" + bfs.total.str() + "," + bfs.uniform_output.str() + ")";
  }
  const double ratio30 = static_cast<double>(clifford_counts(30).ratio);
  const bool ratio_ok = std::abs(ratio30 - 0.41942244) <= 1e-8;
  const double elapsed = seconds_since(start);
  r.passed = ok && ratio_ok && elapsed < 60.0;
  r.detail = fmt("BFS %s formula-match=%s ratio(30)=%.10f", counts.c_str(),
                 ok ? "true" : "false", ratio30);
  r.data = {{"rows", rows}, {"ratio_30", ratio30}, {"ratio_ok", ratio_ok},
            {"under_60s", elapsed < 60.0}};
  return r;
}

CriterionResult design(const AcceptanceOptions&) {
  CriterionResult r = make_result(5, "Design deviation");
  const EnsembleSpec spec{EnsembleKind::kStabilizerEnum, 2, 0, 0};
  const auto& support = exact_support(spec);
  bool ok = true;
  Json devs = Json::array();
  std::string text;
  for (int t = 1; t <= 4; ++t) {
    const double dev = state_design_deviation(support, t).deviation;
    ok = ok && (t <= 3 ? dev < 1e-10 : dev > 1e-3);
    devs.push_back({{"t", t}, {"deviation", dev}});
    text += fmt(" t=%d:%.3e", t, dev);
  }
  r.passed = ok;
  r.detail = "states=" + std::to_string(support.size()) + text;
  r.data = {{"states", support.size()}, {"deviations", devs}};
  return r;
}

CriterionResult far_from_uniform(const AcceptanceOptions& o) {
  CriterionResult r = make_result(6, "Constant-depth far-from-uniform");
  EnsembleSpec spec{EnsembleKind::kBrickwork, 8, 2, criterion_seed(o, 6)};
  const EstimateResult e =
      estimate_tail(spec, Observable::tv_to_uniform(), 0.05, 2000, o.workers,
                    false, "acceptance/far_from_uniform");
  const TailEstimate& t = *e.tail;
  r.passed = t.wilson_lo >= 0.2 && e.elapsed_seconds < 60.0;
  r.detail = fmt("Pr[TV>=0.05]=%.4f wilson=[%.4f,%.4f] (need lo>=0.2)",
                 t.probability, t.wilson_lo, t.wilson_hi);
  r.data = {{"probability", t.probability}, {"wilson_lo", t.wilson_lo},
            {"wilson_hi", t.wilson_hi},     {"mean_tv", e.mean},
            {"under_60s", e.elapsed_seconds < 60.0}};
  return r;
}

CriterionResult variance_decay(const AcceptanceOptions& o) {
  CriterionResult r = make_result(7, "Restricted-depth variance decay");
  const int n = 6;
  const std::size_t trials = 10000;
  const QueryFunction phi = random_query(n, criterion_seed(o, 7), "acceptance/phi7");
  bool ok = true;
  Json rows = Json::array();
  std::string text;
  for (int d : {4, 8, 12, 40}) {
    const VarianceCheck v = variance_vs_design_check(
        n, d, phi, trials, criterion_seed(o, 7) + d, o.workers, false);
    const bool row_ok = d == 40 ? v.matches_haar : v.below_bound;
    ok = ok && row_ok;
    Json row = to_json(v);
    row["check"] = d == 40 ? "matches_haar" : "below_bound";
    row["passed"] = row_ok;
    rows.push_back(row);
    text += d == 40 ? fmt(" d=40:%.3e~%.3e", v.empirical_variance, v.haar_variance)
                    : fmt(" d=%d:%.3e<=%.3e%s", d, v.empirical_variance, v.bound,
                          v.regime_valid ? "" : "*");
  }
  r.passed = ok;
  r.detail = "var" + text + " (* below log-depth threshold)";
  r.data = {{"rows", rows}};
  return r;
}

CriterionResult tails(const AcceptanceOptions& o) {
  CriterionResult r = make_result(8, "Concentration tails");
  const int n = 12;
  const QueryFunction phi = random_query(n, criterion_seed(o, 8), "acceptance/phi8");
  EnsembleSpec spec{EnsembleKind::kHaarState, n, 0, criterion_seed(o, 8)};
  const EstimateResult e =
      estimate_tail(spec, Observable::functional_deviation(phi), 0.05, 5000,
                    o.workers, true, "acceptance/tails");
  const double bound = haar_concentration(n, ConcentrationKind::kFrac, 0.05).value;
  const bool tail_ok = e.tail->wilson_lo <= bound;

  double worst_q = 0.0;
  double worst_tv = 0.0;
  std::size_t pairs = 0;
  for (int m = 2; m <= 8; ++m) {
    const QueryFunction f = random_query(m, criterion_seed(o, 8) + m, "acceptance/lip");
    for (double scale : {0.0, 0.05}) {
      const LipschitzProbe p =
          lipschitz_probe(m, f, 10000, criterion_seed(o, 8) + 16 * m, scale);
      worst_q = std::max(worst_q, p.max_ratio_quadratic);
      worst_tv = std::max(worst_tv, p.max_ratio_tv);
      pairs += p.pairs;
    }
  }
  const bool lip_ok = worst_q <= 2.0 && worst_tv <= 1.0;
  r.passed = tail_ok && lip_ok;
  r.detail = fmt("Pr[dev>0.05]=%.4f wilson_lo=%.4f <= bound=%.4g; lipschitz "
                 "max %.4f (<=2) / %.4f (<=1) over %zu pairs",
                 e.tail->probability, e.tail->wilson_lo, bound, worst_q,
                 worst_tv, pairs);
  r.data = {{"probability", e.tail->probability},
            {"wilson_lo", e.tail->wilson_lo},
            {"bound", bound},
            {"max_ratio_quadratic", worst_q},
            {"max_ratio_tv", worst_tv},
            {"pairs", pairs}};
  return r;
}

BornDistribution random_distribution(int n, RngStream& rng) {
  const std::size_t dim = std::size_t{1} << n;
  std::vector<double> p(dim, 0.0);
  const double style = rng.uniform();
  if (style < 0.1) {
    p[rng() % dim] = 1.0;
  } else if (style < 0.3) {
    double s = 0.0;
    for (double& v : p) {
      if (rng.uniform() < 0.3) s += (v = -std::log(rng.uniform()));
    }
    if (s == 0.0) {
      p[0] = 1.0;
    } else {
      for (double& v : p) v /= s;
    }
  } else {
    double s = 0.0;
    for (double& v : p) s += (v = -std::log(rng.uniform()));
    for (double& v : p) v /= s;
  }
  double s = 0.0;
  for (double v : p) s += v;
  for (double& v : p) v /= s;
  return BornDistribution::from_probs(n, std::move(p));
}

CriterionResult golden(const AcceptanceOptions& o) {
  CriterionResult r = make_result(9, "Bound-calculator golden values");
  const BoundResult markov = far_from_uniform_bound(8, FarFromUniformMode::kMarkov, 0.0);
  const bool markov_ok = markov.extra("radius") == 0.0 &&
                         markov.extra("probability") == 0.25 &&
                         Rational(markov.value) == Rational(1, 4);

  const Rational eps(1, 450);
  const bool constant_ok = Rational(3) / (eps * eps) == 607500;
  const BoundResult fixed = far_from_fixed_bound(30, 1.0 / 450.0);
  const double scaled = std::ldexp(fixed.value, 30);
  const bool fixed_ok = fixed.extra("constant") == 607500.0 &&
                        std::abs(scaled - 607500.0) <= 1e-9 * 607500.0;

  const BoundResult eight = far_from_uniform_bound(20, FarFromUniformMode::kEightDesign);
  const Rational eight_exact = Rational(1) - Rational(3200, BigInt(1) << 20);
  const bool eight_ok = Rational(eight.value) == eight_exact;

  std::size_t berger_pairs = 0;
  std::size_t berger_failures = 0;
  double tightest = INFINITY;
  for (int n = 1; n <= 8; ++n) {
    RngStream rng(criterion_seed(o, 9), static_cast<std::uint64_t>(n));
    for (int k = 0; k < 10000; ++k) {
      const BornDistribution p = random_distribution(n, rng);
      const BornDistribution q = random_distribution(n, rng);
      const NormReport norms = norms_of_difference(p, q);
      ++berger_pairs;
      if (norms.l1 < norms.berger_lower * (1.0 - 1e-12) - 1e-15) ++berger_failures;
      if (norms.berger_lower > 0.0) {
        tightest = std::min(tightest, norms.l1 / norms.berger_lower);
      }
    }
  }
  const bool berger_ok = berger_failures == 0;
  r.passed = markov_ok && constant_ok && fixed_ok && eight_ok && berger_ok;
  r.detail = fmt("markov(0)=%s 3*450^2=607500:%s eight(20)=%s berger %zu/%zu "
                 "hold (min ratio %.6f)",
                 markov_ok ? "1/4" : "MISMATCH", constant_ok && fixed_ok ? "ok" : "MISMATCH",
                 eight_ok ? "1-3200/2^20" : "MISMATCH", berger_pairs - berger_failures,
                 berger_pairs, tightest);
  r.data = {{"markov_ok", markov_ok}, {"constant_ok", constant_ok},
            {"far_from_fixed_ok", fixed_ok}, {"eight_design_ok", eight_ok},
            {"eight_design_probability", eight.value},
            {"berger_pairs", berger_pairs}, {"berger_failures", berger_failures},
            {"berger_min_ratio", tightest}};
  return r;
}

CriterionResult sq_soundness(const AcceptanceOptions&) {
  CriterionResult r = make_result(10, "SQ reduction soundness");
  const int n = 2;
  const double eps = 0.1;
  const double tau = 0.05;
  const BornDistribution reference = BornDistribution::uniform(n);
  std::vector<BornDistribution> targets;
  for (const Statevector& s : enumerate_stabilizer_states(n)) {
    targets.push_back(born_distribution(s));
  }
  targets.push_back(reference);

  DistributionClass cls;
  std::set<std::vector<double>> seen;
  for (const BornDistribution& p : targets) {
    if (tv_distance(p, reference) <= eps + tau) continue;
    std::vector<double> key;
    for (double v : p.probs()) key.push_back(std::round(v * 1e9) / 1e9);
    if (seen.insert(key).second) cls.members.push_back(p);
  }
  const Learner learner = nearest_member_learner(cls.members);
  const std::size_t expected_queries = learner.budget + 1;

  std::size_t runs = 0;
  std::size_t wrong = 0;
  std::size_t accounting_errors = 0;
  for (OracleMode mode : {OracleMode::kExact, OracleMode::kAdversarial}) {
    for (const BornDistribution& p : targets) {
      SqOracle oracle = mode == OracleMode::kExact
                            ? SqOracle::exact(p, tau)
                            : SqOracle::adversarial(p, tau, reference);
      const DecisionOutcome d =
          decide_via_learner(learner, cls, reference, eps, tau, oracle);
      const Verdict truth = tv_distance(p, reference) < 1e-9
                                ? Verdict::kEqualsReference
                                : Verdict::kInClass;
      ++runs;
      if (d.verdict != truth) ++wrong;
      if (d.queries_used != oracle.queries_issued() ||
          d.queries_used != expected_queries ||
          d.learner_queries != learner.budget) {
        ++accounting_errors;
      }
    }
  }
  r.passed = wrong == 0 && accounting_errors == 0;
  r.detail = fmt("%zu runs (%zu targets x exact/adversarial), class size %zu: "
                 "%zu wrong verdicts, %zu accounting mismatches",
                 runs, targets.size(), cls.members.size(), wrong, accounting_errors);
  r.data = {{"runs", runs}, {"targets", targets.size()},
            {"class_size", cls.members.size()}, {"wrong", wrong},
            {"accounting_errors", accounting_errors},
            {"queries_per_run", expected_queries}};
  return r;
}

}  // namespace

CriterionResult run_criterion(int id, const AcceptanceOptions& options) {
  static const std::function<CriterionResult(const AcceptanceOptions&)> table[] = {
      haar_tv, gaussian, moments, census, design, far_from_uniform,
      variance_decay, tails, golden, sq_soundness};
  if (id < 1 || id > kAcceptanceCriteria) {
    throw PreconditionError("acceptance criterion must be in [1, 10]");
  }
  const auto start = Clock::now();
  CriterionResult r;
  try {
    r = table[id - 1](options);
  } catch (const std::exception& e) {
    r.id = id;
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = seconds_since(start);
  return r;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kAcceptanceCriteria; ++id) {
    out.push_back(run_criterion(id, options));
  }
  return out;
}

std::string format_line(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.passed ? "[PASS] " : "[FAIL] ") << "AC" << r.id << " " << r.title
     << ": " << r.detail << " (" << fmt("%.2f", r.seconds) << " s)";
  return os.str();
}

}  // namespace sqlab
