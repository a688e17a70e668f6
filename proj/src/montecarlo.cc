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

#include <chrono>
#include <cmath>
#include <string>

#include "sqlab/circuit.h"
#include "sqlab/error.h"
#include "sqlab/haar.h"
#include "sqlab/parallel.h"
#include "sqlab/rng.h"

namespace sqlab {
namespace {

constexpr double kWilsonZ = 1.959963984540054;

struct Moments {
  double mean = 0.0;
  double variance = 0.0;
  double stderr_ = 0.0;
};

Moments moments_of(std::span<const double> v) {
  Moments m;
  const double n = static_cast<double>(v.size());
  m.mean = pairwise_sum(v) / n;
  std::vector<double> dev2(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double d = v[i] - m.mean;
    dev2[i] = d * d;
  }
  m.variance = v.size() > 1 ? pairwise_sum(dev2) / (n - 1.0) : 0.0;
  m.stderr_ = std::sqrt(m.variance / n);
  return m;
}

std::string default_experiment(const EnsembleSpec& e, const Observable& o) {
  return e.name() + "/" + o.name();
}

EstimateResult run_trials(const EnsembleSpec& ensemble,
                          const Observable& observable, std::size_t trials,
                          int workers, const std::string& experiment) {
  ensemble.validate();
  observable.check_compatible(ensemble.n);
  const auto start = std::chrono::steady_clock::now();
  EstimateResult r;
  r.experiment = experiment.empty() ? default_experiment(ensemble, observable)
                                    : experiment;
  r.seed = ensemble.seed;
  r.workers = std::max(workers, 1);

  if (ensemble.is_exact()) {
    const auto& support = exact_support(ensemble);
    r.exact = true;
    r.samples.resize(support.size());
    parallel_for(support.size(), workers, [&](std::size_t i) {
      r.samples[i] = observable.evaluate(BornDistribution::from_state(support[i]));
    });
  } else {
    if (trials < 2) throw PreconditionError("estimate: trials must be >= 2");
    const RngStream root(ensemble.seed, hash_name(r.experiment));
    r.samples.resize(trials);
    parallel_for(trials, workers, [&](std::size_t t) {
      RngStream rng = spawn_substream(root, t);
      const Statevector s = sample_state(ensemble, rng);
      r.samples[t] = observable.evaluate(BornDistribution::from_state(s));
    });
  }
  r.trials = r.samples.size();
  const Moments m = moments_of(r.samples);
  r.mean = m.mean;
  r.variance = m.variance;
  r.stderr_ = m.stderr_;
  r.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return r;
}

}  // namespace

Observable Observable::functional(QueryFunction phi) {
  Observable o;
  o.kind = ObservableKind::kFunctional;
  o.phi = std::move(phi);
  return o;
}

Observable Observable::functional_deviation(QueryFunction phi) {
  Observable o;
  o.kind = ObservableKind::kFunctionalDeviation;
  o.phi = std::move(phi);
  return o;
}

Observable Observable::collision_z() {
  Observable o;
  o.kind = ObservableKind::kCollisionZ;
  return o;
}

Observable Observable::fourth_x() {
  Observable o;
  o.kind = ObservableKind::kFourthX;
  return o;
}

Observable Observable::monomial(MomentPattern pattern) {
  Observable o;
  o.kind = ObservableKind::kMonomial;
  o.pattern = std::move(pattern);
  return o;
}

Observable Observable::tv_to_fixed(BornDistribution q) {
  Observable o;
  o.kind = ObservableKind::kTvToFixed;
  o.reference = std::move(q);
  return o;
}

void Observable::check_compatible(int n) const {
  switch (kind) {
    case ObservableKind::kFunctional:
    case ObservableKind::kFunctionalDeviation:
      if (!phi || phi->num_qubits() != n) {
        throw PreconditionError("observable: phi must be defined on n=" +
                                std::to_string(n) + " qubits");
      }
      break;
    case ObservableKind::kTvToFixed:
      if (!reference || reference->num_qubits() != n) {
        throw PreconditionError("observable: Q must be defined on n=" +
                                std::to_string(n) + " qubits");
      }
      break;
    case ObservableKind::kMonomial: {
      if (!pattern) throw PreconditionError("observable: missing moment pattern");
      if (pattern->exponents.size() != pattern->points.size()) {
        throw PreconditionError("observable: malformed moment pattern");
      }
      for (std::uint64_t x : pattern->points) {
        if (x >= (std::uint64_t{1} << n)) {
          throw PreconditionError("observable: moment point out of range");
        }
      }
      break;
    }
    default:
      break;
  }
}

double Observable::evaluate(const BornDistribution& p) const {
  switch (kind) {
    case ObservableKind::kTvToUniform: {
      const double u = 1.0 / static_cast<double>(p.size());
      double s = 0.0;
      for (double v : p.probs()) s += std::abs(v - u);
      return 0.5 * s;
    }
    case ObservableKind::kFunctional:
      return sqlab::functional(p, *phi);
    case ObservableKind::kFunctionalDeviation: {
      double mean_phi = 0.0;
      for (double v : phi->table()) mean_phi += v;
      mean_phi /= static_cast<double>(p.size());
      return std::abs(sqlab::functional(p, *phi) - mean_phi);
    }
    case ObservableKind::kCollisionZ:
      return collision_stats(p).z;
    case ObservableKind::kFourthX:
      return collision_stats(p).x;
    case ObservableKind::kMonomial: {
      double prod = 1.0;
      for (std::size_t l = 0; l < pattern->points.size(); ++l) {
        prod *= std::pow(p[pattern->points[l]], pattern->exponents[l]);
      }
      return prod;
    }
    case ObservableKind::kTvToFixed:
      return tv_distance(p, *reference);
  }
  return 0.0;
}

std::string Observable::name() const {
  switch (kind) {
    case ObservableKind::kTvToUniform: return "tv_to_uniform";
    case ObservableKind::kFunctional: return "functional";
    case ObservableKind::kFunctionalDeviation: return "functional_deviation";
    case ObservableKind::kCollisionZ: return "collision_Z";
    case ObservableKind::kFourthX: return "fourth_X";
    case ObservableKind::kMonomial: {
      std::string s = "monomial(";
      for (std::size_t l = 0; l < pattern->points.size(); ++l) {
        if (l) s += ",";
        s += std::to_string(pattern->points[l]) + "^" +
             std::to_string(pattern->exponents[l]);
      }
      return s + ")";
    }
    case ObservableKind::kTvToFixed: return "tv_to_fixed";
  }
  return "unknown";
}

std::pair<double, double> wilson_interval(std::size_t hits, std::size_t trials) {
  if (trials == 0) return {0.0, 1.0};
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(hits) / n;
  const double z2 = kWilsonZ * kWilsonZ;
  const double denom = 1.0 + z2 / n;
  const double center = (p + z2 / (2.0 * n)) / denom;
  const double half =
      kWilsonZ * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
  return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

EstimateResult estimate_expectation(const EnsembleSpec& ensemble,
                                    const Observable& observable,
                                    std::size_t trials, int workers,
                                    const std::string& experiment) {
  return run_trials(ensemble, observable, trials, workers, experiment);
}

EstimateResult estimate_tail(const EnsembleSpec& ensemble,
                             const Observable& observable, double threshold,
                             std::size_t trials, int workers, bool strict,
                             const std::string& experiment) {
  if (!ensemble.is_exact() && trials < 100) {
    throw PreconditionError("estimate_tail: trials must be >= 100");
  }
  EstimateResult r = run_trials(ensemble, observable, trials, workers, experiment);
  TailEstimate tail;
  tail.threshold = threshold;
  tail.strict = strict;
  for (double v : r.samples) {
    if (strict ? v > threshold : v >= threshold) ++tail.hits;
  }
  tail.probability = static_cast<double>(tail.hits) / static_cast<double>(r.trials);
  std::tie(tail.wilson_lo, tail.wilson_hi) = wilson_interval(tail.hits, r.trials);
  r.tail = tail;
  return r;
}

GaussianCheck gaussian_identity_check(GaussianIdentity kind, std::uint64_t dim,
                                      std::size_t trials, std::uint64_t seed,
                                      int workers, double tolerance) {
  if (trials < 10000) {
    throw PreconditionError("gaussian_identity_check: trials must be >= 10^4");
  }
  if (kind == GaussianIdentity::kDelta && dim < 1) {
    throw PreconditionError("gaussian_identity_check: D must be >= 1");
  }
  const auto start = std::chrono::steady_clock::now();
  GaussianCheck out;
  EstimateResult& r = out.estimate;
  r.experiment = kind == GaussianIdentity::kM
                     ? std::string("gaussian_M")
                     : "gaussian_Delta(D=" + std::to_string(dim) + ")";
  r.seed = seed;
  r.workers = std::max(workers, 1);
  r.samples.resize(trials);
  const RngStream root(seed, hash_name(r.experiment));
  parallel_for(trials, workers, [&](std::size_t t) {
    RngStream rng = spawn_substream(root, t);
    if (kind == GaussianIdentity::kM) {
      const double g = rng.normal();
      const double h = rng.normal();
      r.samples[t] = 0.5 * std::abs(0.5 * (g * g + h * h) - 1.0);
    } else {
      // chi^2_{2D} / 2 ~ Gamma(D, 1).
      double half_chi2 = 0.0;
      for (std::uint64_t j = 0; j < dim; ++j) half_chi2 -= std::log(rng.uniform());
      r.samples[t] = 0.5 * std::abs(1.0 - half_chi2 / static_cast<double>(dim));
    }
  });
  r.trials = trials;
  const Moments m = moments_of(r.samples);
  r.mean = m.mean;
  r.variance = m.variance;
  r.stderr_ = m.stderr_;
  r.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  if (kind == GaussianIdentity::kM) {
    out.target = gaussian_M();
    out.passed = std::abs(r.mean - out.target) <= tolerance;
  } else {
    out.target = gaussian_Delta_bound(static_cast<double>(dim));
    out.passed = r.mean <= out.target + 3.0 * r.stderr_;
  }
  return out;
}

std::optional<std::pair<double, double>> lipschitz_ratios(
    const Statevector& psi, const Statevector& chi, const QueryFunction& phi) {
  double dist2 = 0.0;
  for (std::size_t i = 0; i < psi.dim(); ++i) dist2 += std::norm(psi[i] - chi[i]);
  const double dist = std::sqrt(dist2);
  if (dist < 1e-12) return std::nullopt;
  const double u = 1.0 / static_cast<double>(psi.dim());
  double quad_psi = 0.0, quad_chi = 0.0, tv_psi = 0.0, tv_chi = 0.0;
  for (std::size_t x = 0; x < psi.dim(); ++x) {
    const double p = std::norm(psi[x]);
    const double q = std::norm(chi[x]);
    quad_psi += phi[x] * p;
    quad_chi += phi[x] * q;
    tv_psi += std::abs(p - u);
    tv_chi += std::abs(q - u);
  }
  return std::make_pair(std::abs(quad_psi - quad_chi) / dist,
                        0.5 * std::abs(tv_psi - tv_chi) / dist);
}

LipschitzProbe lipschitz_probe(int n, const QueryFunction& phi,
                               std::size_t pair_trials, std::uint64_t seed,
                               double local_scale) {
  if (pair_trials < 1) throw PreconditionError("lipschitz_probe: pair_trials >= 1");
  if (phi.num_qubits() != n) throw PreconditionError("lipschitz_probe: phi has wrong n");
  LipschitzProbe out;
  const RngStream root(seed, hash_name("lipschitz_probe"));
  auto record = [&](const Statevector& a, const Statevector& b) {
    const auto ratios = lipschitz_ratios(a, b, phi);
    if (!ratios) {
      ++out.skipped;
      return;
    }
    ++out.pairs;
    out.max_ratio_quadratic = std::max(out.max_ratio_quadratic, ratios->first);
    out.max_ratio_tv = std::max(out.max_ratio_tv, ratios->second);
  };
  for (std::size_t t = 0; t < pair_trials; ++t) {
    RngStream rng = spawn_substream(root, t);
    const Statevector psi = haar_state(n, rng);
    const Statevector chi = haar_state(n, rng);
    record(psi, chi);
    if (local_scale > 0.0) {
      std::vector<Complex> amps(psi.amplitudes().begin(), psi.amplitudes().end());
      const std::vector<Complex> g = complex_gaussian_vector(amps.size(), rng);
      for (std::size_t i = 0; i < amps.size(); ++i) amps[i] += local_scale * g[i];
      Statevector near = Statevector::from_amplitudes(n, std::move(amps));
      near.renormalize();
      record(psi, near);
    }
  }
  return out;
}

double assembled_variance_bound(int n, int depth, const QueryFunction& phi) {
  const double dim = std::exp2(n);
  const double off = brickwork_second_moment_formula(n, depth, false) - 1.0 / (dim * dim);
  const double diag = brickwork_second_moment_formula(n, depth, true) - 1.0 / (dim * dim);
  double sum_abs = 0.0, sum_sq = 0.0;
  for (double v : phi.table()) {
    sum_abs += std::abs(v);
    sum_sq += v * v;
  }
  // sum_{x != y} |phi_x phi_y| off + sum_x phi_x^2 diag
  return off * (sum_abs * sum_abs - sum_sq) + diag * sum_sq;
}

double haar_assembled_variance(const QueryFunction& phi) {
  const int n = phi.num_qubits();
  const double dim = std::exp2(n);
  const double off = haar_pair_moment(n, false).convert_to<double>() - 1.0 / (dim * dim);
  const double diag = haar_pair_moment(n, true).convert_to<double>() - 1.0 / (dim * dim);
  double sum = 0.0, sum_sq = 0.0;
  for (double v : phi.table()) {
    sum += v;
    sum_sq += v * v;
  }
  return off * (sum * sum - sum_sq) + diag * sum_sq;
}

VarianceCheck variance_vs_design_check(int n, int depth, const QueryFunction& phi,
                                       std::size_t trials, std::uint64_t seed,
                                       int workers, bool enforce_regime) {
  if (trials < 1000) throw PreconditionError("variance check: trials must be >= 1000");
  if (phi.num_qubits() != n) throw PreconditionError("variance check: phi has wrong n");
  VarianceCheck out;
  out.n = n;
  out.depth = depth;
  out.regime_valid = depth >= brickwork_moment_threshold(n);
  if (enforce_regime && !out.regime_valid) {
    // Reuses the analytic module's error text.
    brickwork_second_moment_bound(n, depth, true);
  }
  EnsembleSpec spec{EnsembleKind::kBrickwork, n, depth, seed};
  const EstimateResult r =
      estimate_expectation(spec, Observable::functional(phi), trials, workers,
                           "variance_check/d=" + std::to_string(depth));
  out.trials = r.trials;
  out.mean = r.mean;
  out.empirical_variance = r.variance;
  std::vector<double> dev4(r.samples.size());
  for (std::size_t i = 0; i < dev4.size(); ++i) {
    const double d = r.samples[i] - r.mean;
    dev4[i] = d * d * d * d;
  }
  const double nt = static_cast<double>(r.trials);
  const double m4 = pairwise_sum(dev4) / nt;
  const double s2 = r.variance;
  out.variance_stderr =
      std::sqrt(std::max(0.0, (m4 - s2 * s2 * (nt - 3.0) / (nt - 1.0)) / nt));
  out.bound = assembled_variance_bound(n, depth, phi);
  out.haar_variance = haar_assembled_variance(phi);
  out.below_bound = out.empirical_variance <= out.bound + 4.0 * out.variance_stderr;
  out.matches_haar = std::abs(out.empirical_variance - out.haar_variance) <=
                     4.0 * out.variance_stderr;
  return out;
}

}  // namespace sqlab
