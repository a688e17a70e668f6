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

#ifndef SQLAB_DESIGN_H_
#define SQLAB_DESIGN_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "sqlab/ensemble.h"
#include "sqlab/statevector.h"

namespace sqlab {

struct DesignDeviationReport {
  int n = 0;
  int t = 0;
  std::size_t trials = 0;  // states averaged (support size when exact)
  bool exact = false;
  // || E[(|psi><psi|)^{(x)t}] - P_sym / binom(D+t-1, t) ||_1
  double deviation = 0.0;
  // Noise scale of `deviation` for sampled ensembles:
  // sqrt(dim_sym * (1 - ||avg||_F^2) / trials). Zero for exact ensembles.
  double stderr_estimate = 0.0;
};

// Largest D^t the deviation calculation accepts.
inline constexpr std::uint64_t kMaxDesignDimension = 4096;

// Both the t-fold moment operator and P_sym live on the symmetric subspace, so
// the trace-norm distance is computed there, in the orthonormal occupation
// basis |m> whose overlap with psi^{(x)t} is sqrt(t!/prod m_i!) prod psi_i^m_i.
std::size_t symmetric_dimension(std::uint64_t dim, int t);
Eigen::VectorXcd symmetric_power(std::span<const Complex> psi, int t);

// Exact uniform average over the given states.
DesignDeviationReport state_design_deviation(std::span<const Statevector> states,
                                             int t);
// Sampled ensembles draw `trials` states on per-trial substreams of
// (spec.seed, "design"); exact ensembles ignore `trials`.
DesignDeviationReport state_design_deviation(const EnsembleSpec& spec, int t,
                                             std::size_t trials, int workers = 1);

// Sum of absolute eigenvalues of a Hermitian matrix.
double trace_norm_hermitian(const Eigen::MatrixXcd& m);

}  // namespace sqlab

#endif  // SQLAB_DESIGN_H_
