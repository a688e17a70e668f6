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

#include "sqlab/distribution.h"

#include <cmath>
#include <string>

#include "sqlab/error.h"

namespace sqlab {
namespace {

void check_n(int n) {
  if (n < 1 || n > 30) {
    throw PreconditionError("qubit count must be in [1, 30], got " +
                            std::to_string(n));
  }
}

void check_same_n(int a, int b, const char* op) {
  if (a != b) {
    throw PreconditionError(std::string(op) + ": mismatched qubit counts " +
                            std::to_string(a) + " and " + std::to_string(b));
  }
}

}  // namespace

BornDistribution BornDistribution::from_probs(int n, std::vector<double> probs) {
  check_n(n);
  if (probs.size() != (std::size_t{1} << n)) {
    throw PreconditionError("distribution has length " +
                            std::to_string(probs.size()) + ", expected 2^" +
                            std::to_string(n));
  }
  double total = 0.0;
  for (double& p : probs) {
    if (!(p >= -1e-12)) {
      throw PreconditionError("negative probability " + std::to_string(p));
    }
    if (p < 0.0) p = 0.0;
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw PreconditionError("probabilities sum to " + std::to_string(total));
  }
  return BornDistribution(n, std::move(probs));
}

BornDistribution BornDistribution::from_state(const Statevector& state) {
  const double nrm = state.norm();
  if (std::abs(nrm - 1.0) > 1e-6) {
    throw PreconditionError("born_distribution: state norm " +
                            std::to_string(nrm) + " is not 1");
  }
  std::vector<double> probs(state.dim());
  for (std::size_t x = 0; x < probs.size(); ++x) probs[x] = std::norm(state[x]);
  return from_probs(state.num_qubits(), std::move(probs));
}

BornDistribution BornDistribution::uniform(int n) {
  check_n(n);
  const std::size_t dim = std::size_t{1} << n;
  return BornDistribution(n, std::vector<double>(dim, 1.0 / static_cast<double>(dim)));
}

BornDistribution BornDistribution::point_mass(int n, std::uint64_t x) {
  check_n(n);
  const std::size_t dim = std::size_t{1} << n;
  if (x >= dim) throw PreconditionError("point mass label out of range");
  std::vector<double> probs(dim, 0.0);
  probs[x] = 1.0;
  return BornDistribution(n, std::move(probs));
}

QueryFunction::QueryFunction(int n, std::vector<double> table)
    : n_(n), table_(std::move(table)) {
  check_n(n);
  if (table_.size() != (std::size_t{1} << n)) {
    throw PreconditionError("query table has length " +
                            std::to_string(table_.size()) + ", expected 2^" +
                            std::to_string(n));
  }
  for (double v : table_) {
    if (!(v >= -1.0 && v <= 1.0)) {
      throw PreconditionError("query value " + std::to_string(v) +
                              " outside [-1, 1]");
    }
  }
}

QueryFunction QueryFunction::constant(int n, double value) {
  check_n(n);
  return QueryFunction(n, std::vector<double>(std::size_t{1} << n, value));
}

QueryFunction QueryFunction::indicator(int n,
                                       std::span<const std::uint64_t> members) {
  check_n(n);
  std::vector<double> table(std::size_t{1} << n, 0.0);
  for (std::uint64_t x : members) {
    if (x >= table.size()) throw PreconditionError("indicator label out of range");
    table[x] = 1.0;
  }
  return QueryFunction(n, std::move(table));
}

double tv_distance(const BornDistribution& p, const BornDistribution& q) {
  check_same_n(p.num_qubits(), q.num_qubits(), "tv_distance");
  double s = 0.0;
  for (std::size_t x = 0; x < p.size(); ++x) s += std::abs(p[x] - q[x]);
  return 0.5 * s;
}

double functional(const BornDistribution& p, const QueryFunction& phi) {
  check_same_n(p.num_qubits(), phi.num_qubits(), "functional");
  double s = 0.0;
  for (std::size_t x = 0; x < p.size(); ++x) s += p[x] * phi[x];
  return s;
}

NormReport norms_of_difference(const BornDistribution& p,
                               const BornDistribution& q) {
  check_same_n(p.num_qubits(), q.num_qubits(), "norms_of_difference");
  double s1 = 0.0, s2 = 0.0, s4 = 0.0;
  for (std::size_t x = 0; x < p.size(); ++x) {
    const double f = p[x] - q[x];
    const double f2 = f * f;
    s1 += std::abs(f);
    s2 += f2;
    s4 += f2 * f2;
  }
  NormReport r;
  r.l1 = s1;
  r.l2 = std::sqrt(s2);
  r.l4 = std::sqrt(std::sqrt(s4));
  // l2^3 / l4^2 = s2^{3/2} / s4^{1/2}.
  r.berger_lower = s4 > 0.0 ? s2 * std::sqrt(s2 / s4) : 0.0;
  return r;
}

CollisionStats collision_stats(const BornDistribution& p) {
  CollisionStats c;
  for (double v : p.probs()) {
    const double v2 = v * v;
    c.z += v2;
    c.x += v2 * v2;
  }
  return c;
}

QueryFunction max_tv_witness(const BornDistribution& p,
                             const BornDistribution& q) {
  check_same_n(p.num_qubits(), q.num_qubits(), "max_tv_witness");
  std::vector<double> table(p.size(), 0.0);
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (p[x] > q[x]) table[x] = 1.0;
  }
  return QueryFunction(p.num_qubits(), std::move(table));
}

}  // namespace sqlab
