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

#ifndef SQLAB_MONTECARLO_H_
#define SQLAB_MONTECARLO_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sqlab/analytic.h"
#include "sqlab/distribution.h"
#include "sqlab/ensemble.h"

namespace sqlab {

enum class ObservableKind {
  kTvToUniform,
  kFunctional,           // P[phi]
  kFunctionalDeviation,  // |P[phi] - U[phi]|
  kCollisionZ,
  kFourthX,
  kMonomial,             // prod_l P(x_l)^lambda_l
  kTvToFixed,
};

struct Observable {
  ObservableKind kind = ObservableKind::kTvToUniform;
  std::optional<QueryFunction> phi;
  std::optional<MomentPattern> pattern;
  std::optional<BornDistribution> reference;

  static Observable tv_to_uniform() { return {}; }
  static Observable functional(QueryFunction phi);
  static Observable functional_deviation(QueryFunction phi);
  static Observable collision_z();
  static Observable fourth_x();
  static Observable monomial(MomentPattern pattern);
  static Observable tv_to_fixed(BornDistribution q);

  // Throws PreconditionError when phi / Q / pattern do not fit n.
  void check_compatible(int n) const;
  double evaluate(const BornDistribution& p) const;
  std::string name() const;
};

struct TailEstimate {
  double threshold = 0.0;
  bool strict = false;  // > rather than >=
  std::size_t hits = 0;
  double probability = 0.0;
  double wilson_lo = 0.0;
  double wilson_hi = 1.0;
};

struct EstimateResult {
  std::string experiment;
  double mean = 0.0;
  double stderr_ = 0.0;  // sample standard deviation / sqrt(trials)
  double variance = 0.0; // unbiased sample variance
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  int workers = 1;
  double elapsed_seconds = 0.0;
  bool exact = false;  // averaged over an exact ensemble's full support
  std::optional<TailEstimate> tail;
  std::vector<double> samples;  // per-trial observable values, trial order
};

// Wilson score interval at 95% (z = 1.959964), clipped to [0, 1].
std::pair<double, double> wilson_interval(std::size_t hits, std::size_t trials);

// Trial t draws from substream t of RngStream(seed, hash_name(experiment)).
// Values are stored per trial and reduced with a fixed pairwise tree, so the
// result is bit-identical for any worker count. Exact ensembles average over
// their support and ignore `trials`.
EstimateResult estimate_expectation(const EnsembleSpec& ensemble,
                                    const Observable& observable,
                                    std::size_t trials, int workers = 1,
                                    const std::string& experiment = "");

// As estimate_expectation, plus the empirical Pr[observable >= threshold]
// (or > when strict) with its Wilson interval.
EstimateResult estimate_tail(const EnsembleSpec& ensemble,
                             const Observable& observable, double threshold,
                             std::size_t trials, int workers = 1,
                             bool strict = false,
                             const std::string& experiment = "");

enum class GaussianIdentity { kM, kDelta };

// kM:     (1/2) E|(g^2 + h^2)/2 - 1|, target 1/e.
// kDelta: (1/2) E|1 - chi^2_{2D}/(2D)|, bound 1/(2 sqrt D); chi^2_{2D}/2 is
//         drawn as a sum of D unit exponentials.
struct GaussianCheck {
  EstimateResult estimate;
  double target = 0.0;  // 1/e or 1/(2 sqrt D)
  bool passed = false;  // M: |mean - 1/e| <= tolerance; Delta: mean <= bound + 3 stderr
};
GaussianCheck gaussian_identity_check(GaussianIdentity kind, std::uint64_t dim,
                                      std::size_t trials, std::uint64_t seed,
                                      int workers = 1, double tolerance = 0.002);

struct LipschitzProbe {
  double max_ratio_quadratic = 0.0;  // |<psi|Phi|psi> - <chi|Phi|chi>| / |psi - chi|
  double max_ratio_tv = 0.0;         // |d_TV(P_psi,U) - d_TV(P_chi,U)| / |psi - chi|
  std::size_t pairs = 0;
  std::size_t skipped = 0;           // |psi - chi| < 1e-12
};

// Independent Haar pairs; when local_scale > 0, each trial also probes the
// pair (psi, normalize(psi + local_scale * g)).
LipschitzProbe lipschitz_probe(int n, const QueryFunction& phi,
                               std::size_t pair_trials, std::uint64_t seed,
                               double local_scale = 0.0);
// Ratio pair for one given (psi, chi); nullopt when the pair is skipped.
std::optional<std::pair<double, double>> lipschitz_ratios(
    const Statevector& psi, const Statevector& chi, const QueryFunction& phi);

struct VarianceCheck {
  int n = 0;
  int depth = 0;
  std::size_t trials = 0;
  double empirical_variance = 0.0;
  double variance_stderr = 0.0;
  double mean = 0.0;
  // sum_{x,y} |phi(x) phi(y)| (B_xy - 2^{-2n}) with B the restricted-depth
  // second moment bound.
  double bound = 0.0;
  bool regime_valid = false;  // depth >= log n / log(5/4)
  // sum_{x,y} phi(x) phi(y) (E_Haar[P(x)P(y)] - 2^{-2n})
  double haar_variance = 0.0;
  bool below_bound = false;   // empirical <= bound + 4 stderr
  bool matches_haar = false;  // |empirical - haar| <= 4 stderr
};

// Var over brickwork circuits of P_U[phi]. Throws RegimeError below the
// restricted-depth threshold unless enforce_regime is false.
VarianceCheck variance_vs_design_check(int n, int depth, const QueryFunction& phi,
                                       std::size_t trials, std::uint64_t seed,
                                       int workers = 1, bool enforce_regime = true);

double assembled_variance_bound(int n, int depth, const QueryFunction& phi);
double haar_assembled_variance(const QueryFunction& phi);

}  // namespace sqlab

#endif  // SQLAB_MONTECARLO_H_
