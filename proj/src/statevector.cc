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

#include "sqlab/statevector.h"

#include <cmath>
#include <string>

#include "sqlab/error.h"

namespace sqlab {
namespace {

constexpr int kMaxQubits = 30;
constexpr double kUnitarityTolerance = 1e-10;

void check_qubit_count(int n) {
  if (n < 1 || n > kMaxQubits) {
    throw PreconditionError("qubit count must be in [1, " +
                            std::to_string(kMaxQubits) + "], got " +
                            std::to_string(n));
  }
}

}  // namespace

Statevector Statevector::basis(int n, std::uint64_t label) {
  check_qubit_count(n);
  const std::size_t dim = std::size_t{1} << n;
  if (label >= dim) {
    throw PreconditionError("basis label " + std::to_string(label) +
                            " out of range for n=" + std::to_string(n));
  }
  std::vector<Complex> amps(dim, Complex(0.0, 0.0));
  amps[label] = 1.0;
  return Statevector(n, std::move(amps));
}

Statevector Statevector::from_amplitudes(int n, std::vector<Complex> amplitudes) {
  check_qubit_count(n);
  if (amplitudes.size() != (std::size_t{1} << n)) {
    throw PreconditionError("amplitude vector has length " +
                            std::to_string(amplitudes.size()) +
                            ", expected 2^" + std::to_string(n));
  }
  return Statevector(n, std::move(amplitudes));
}

double Statevector::norm() const {
  double s = 0.0;
  for (const Complex& a : amplitudes_) s += std::norm(a);
  return std::sqrt(s);
}

void Statevector::renormalize() {
  const double nrm = norm();
  if (nrm == 0.0) throw PreconditionError("cannot renormalize the zero vector");
  for (Complex& a : amplitudes_) a /= nrm;
}

double unitarity_error(const Eigen::MatrixXcd& u) {
  if (u.rows() != u.cols()) return INFINITY;
  const Eigen::MatrixXcd diff =
      u * u.adjoint() - Eigen::MatrixXcd::Identity(u.rows(), u.cols());
  return diff.cwiseAbs().maxCoeff();
}

TwoQubitGate::TwoQubitGate(const Eigen::Matrix4cd& matrix) : matrix_(matrix) {
  const double err = unitarity_error(matrix_);
  if (!(err < kUnitarityTolerance)) {
    throw PreconditionError("two-qubit gate is not unitary (max|GG^+ - I| = " +
                            std::to_string(err) + ")");
  }
}

TwoQubitGate TwoQubitGate::identity() {
  return TwoQubitGate(Eigen::Matrix4cd::Identity());
}

TwoQubitGate TwoQubitGate::swap() {
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
  m(0, 0) = m(1, 2) = m(2, 1) = m(3, 3) = 1.0;
  return TwoQubitGate(m);
}

TwoQubitGate TwoQubitGate::cnot() {
  // Local index b0 + 2 b1 with b0 the control: flips b1 when b0 = 1.
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
  m(0, 0) = m(2, 2) = 1.0;
  m(3, 1) = m(1, 3) = 1.0;
  return TwoQubitGate(m);
}

TwoQubitGate TwoQubitGate::bell() {
  const double h = 1.0 / std::sqrt(2.0);
  Eigen::Matrix4cd had = Eigen::Matrix4cd::Zero();
  // H on the low local bit, identity on the high one.
  for (int hi = 0; hi < 2; ++hi) {
    const int base = 2 * hi;
    had(base, base) = h;
    had(base, base + 1) = h;
    had(base + 1, base) = h;
    had(base + 1, base + 1) = -h;
  }
  return TwoQubitGate(cnot().matrix() * had);
}

void apply_two_qubit_gate(Statevector& state, const TwoQubitGate& gate,
                          int first, int second) {
  const int n = state.num_qubits();
  if (first < 0 || first >= n || second < 0 || second >= n) {
    throw PreconditionError("qubit index out of range: (" +
                            std::to_string(first) + ", " +
                            std::to_string(second) + ") with n=" +
                            std::to_string(n));
  }
  if (first == second) {
    throw PreconditionError("two-qubit gate needs distinct qubits, got " +
                            std::to_string(first) + " twice");
  }
  const std::size_t bit0 = std::size_t{1} << first;
  const std::size_t bit1 = std::size_t{1} << second;
  const int lo = std::min(first, second);
  const int hi = std::max(first, second);
  const std::size_t lo_mask = (std::size_t{1} << lo) - 1;
  const std::size_t mid_mask = ((std::size_t{1} << (hi - 1)) - 1) & ~lo_mask;
  const std::size_t quarter = state.dim() >> 2;
  const Eigen::Matrix4cd& g = gate.matrix();
  std::span<Complex> amps = state.mutable_amplitudes();

  for (std::size_t k = 0; k < quarter; ++k) {
    // Spread k over all bit positions except lo and hi.
    const std::size_t base = (k & lo_mask) | ((k & mid_mask) << 1) |
                             ((k & ~(lo_mask | mid_mask)) << 2);
    const std::size_t idx[4] = {base, base | bit0, base | bit1,
                                base | bit0 | bit1};
    const Complex in[4] = {amps[idx[0]], amps[idx[1]], amps[idx[2]],
                           amps[idx[3]]};
    for (int r = 0; r < 4; ++r) {
      amps[idx[r]] = g(r, 0) * in[0] + g(r, 1) * in[1] + g(r, 2) * in[2] +
                     g(r, 3) * in[3];
    }
  }
}

}  // namespace sqlab
