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

#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "sqlab/error.h"
#include "sqlab/parallel.h"
#include "sqlab/rng.h"

namespace sqlab {
namespace {

constexpr std::size_t kBlock = 256;

void check_dimension(std::uint64_t dim, int t) {
  if (t < 1) throw PreconditionError("design deviation: t must be >= 1");
  long double power = 1.0L;
  for (int i = 0; i < t; ++i) power *= static_cast<long double>(dim);
  if (power > static_cast<long double>(kMaxDesignDimension)) {
    throw PreconditionError("design deviation: D^t = " + std::to_string(dim) +
                            "^" + std::to_string(t) + " exceeds " +
                            std::to_string(kMaxDesignDimension));
  }
}

// Calls fn(occupation) for every multiset of size t over [0, dim) in
// lexicographic order of the nondecreasing index sequence.
template <typename Fn>
void for_each_multiset(std::uint64_t dim, int t, Fn&& fn) {
  std::vector<std::uint64_t> idx(t, 0);
  while (true) {
    fn(idx);
    int k = t - 1;
    while (k >= 0 && idx[k] == dim - 1) --k;
    if (k < 0) return;
    ++idx[k];
    for (int j = k + 1; j < t; ++j) idx[j] = idx[k];
  }
}

DesignDeviationReport finish(Eigen::MatrixXcd avg, int n, int t,
                             std::size_t trials, bool exact) {
  const double avg_fro2 = avg.squaredNorm();
  const auto dsym = avg.rows();
  avg.diagonal().array() -= 1.0 / static_cast<double>(dsym);
  DesignDeviationReport r;
  r.n = n;
  r.t = t;
  r.trials = trials;
  r.exact = exact;
  r.deviation = trace_norm_hermitian(avg);
  if (!exact) {
    r.stderr_estimate = std::sqrt(static_cast<double>(dsym) *
                                  std::max(0.0, 1.0 - avg_fro2) /
                                  static_cast<double>(trials));
  }
  return r;
}

}  // namespace

std::size_t symmetric_dimension(std::uint64_t dim, int t) {
  // binom(D + t - 1, t)
  long double c = 1.0L;
  for (int i = 1; i <= t; ++i) c = c * static_cast<long double>(dim + i - 1) / i;
  return static_cast<std::size_t>(std::llround(c));
}

Eigen::VectorXcd symmetric_power(std::span<const Complex> psi, int t) {
  const std::uint64_t dim = psi.size();
  Eigen::VectorXcd out(symmetric_dimension(dim, t));
  double log_t_fact = std::lgamma(t + 1.0);
  Eigen::Index row = 0;
  for_each_multiset(dim, t, [&](const std::vector<std::uint64_t>& idx) {
    Complex prod = 1.0;
    double log_mult = log_t_fact;
    int run = 1;
    for (int j = 0; j < t; ++j) {
      prod *= psi[idx[j]];
      if (j + 1 < t && idx[j + 1] == idx[j]) {
        ++run;
      } else {
        log_mult -= std::lgamma(run + 1.0);
        run = 1;
      }
    }
    out(row++) = std::sqrt(std::exp(log_mult)) * prod;
  });
  return out;
}

double trace_norm_hermitian(const Eigen::MatrixXcd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().cwiseAbs().sum();
}

DesignDeviationReport state_design_deviation(std::span<const Statevector> states,
                                             int t) {
  if (states.empty()) throw PreconditionError("design deviation: empty ensemble");
  const std::uint64_t dim = states.front().dim();
  check_dimension(dim, t);
  const auto dsym = static_cast<Eigen::Index>(symmetric_dimension(dim, t));
  Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(dsym, dsym);
  for (const Statevector& s : states) {
    if (s.dim() != dim) throw PreconditionError("design deviation: mixed dimensions");
    const Eigen::VectorXcd v = symmetric_power(s.amplitudes(), t);
    sum.noalias() += v * v.adjoint();
  }
  sum /= static_cast<double>(states.size());
  return finish(std::move(sum), states.front().num_qubits(), t, states.size(),
                true);
}

DesignDeviationReport state_design_deviation(const EnsembleSpec& spec, int t,
                                             std::size_t trials, int workers) {
  spec.validate();
  if (spec.is_exact()) {
    const auto& support = exact_support(spec);
    return state_design_deviation(std::span<const Statevector>(support), t);
  }
  if (trials < 1) throw PreconditionError("design deviation: trials must be >= 1");
  const std::uint64_t dim = std::uint64_t{1} << spec.n;
  check_dimension(dim, t);
  const auto dsym = static_cast<Eigen::Index>(symmetric_dimension(dim, t));
  const RngStream root(spec.seed, hash_name("design"));

  const std::size_t blocks = (trials + kBlock - 1) / kBlock;
  std::vector<Eigen::MatrixXcd> partial(blocks);
  parallel_for(blocks, workers, [&](std::size_t b) {
    Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(dsym, dsym);
    const std::size_t end = std::min(trials, (b + 1) * kBlock);
    for (std::size_t trial = b * kBlock; trial < end; ++trial) {
      RngStream rng = spawn_substream(root, trial);
      const Statevector s = sample_state(spec, rng);
      const Eigen::VectorXcd v = symmetric_power(s.amplitudes(), t);
      acc.noalias() += v * v.adjoint();
    }
    partial[b] = std::move(acc);
  });
  // Pairwise merge in a fixed shape.
  for (std::size_t stride = 1; stride < blocks; stride *= 2) {
    for (std::size_t i = 0; i + stride < blocks; i += 2 * stride) {
      partial[i] += partial[i + stride];
    }
  }
  Eigen::MatrixXcd avg = partial[0] / static_cast<double>(trials);
  return finish(std::move(avg), spec.n, t, trials, false);
}

}  // namespace sqlab
