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

#ifndef SQLAB_STATEVECTOR_H_
#define SQLAB_STATEVECTOR_H_

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Core>

namespace sqlab {

using Complex = std::complex<double>;

// Qubits are numbered from 0. Qubit q is bit q of the basis index, so qubit 0
// is the least-significant bit.
class Statevector {
 public:
  // |label> on n qubits.
  static Statevector basis(int n, std::uint64_t label = 0);
  // Takes ownership of the amplitudes; the length must be exactly 2^n. No
  // normalization is imposed.
  static Statevector from_amplitudes(int n, std::vector<Complex> amplitudes);

  int num_qubits() const { return n_; }
  std::size_t dim() const { return amplitudes_.size(); }
  std::span<const Complex> amplitudes() const { return amplitudes_; }
  std::span<Complex> mutable_amplitudes() { return amplitudes_; }
  const Complex& operator[](std::size_t i) const { return amplitudes_[i]; }

  double norm() const;
  void renormalize();

 private:
  Statevector(int n, std::vector<Complex> amplitudes)
      : n_(n), amplitudes_(std::move(amplitudes)) {}

  int n_;
  std::vector<Complex> amplitudes_;
};

// A 4x4 unitary acting on an ordered pair of qubits (first, second). The local
// basis index is bit(first) + 2 * bit(second).
class TwoQubitGate {
 public:
  // Throws PreconditionError unless max|G G^dagger - I| < 1e-10.
  explicit TwoQubitGate(const Eigen::Matrix4cd& matrix);

  static TwoQubitGate identity();
  static TwoQubitGate swap();
  // Control on the first operand, target on the second.
  static TwoQubitGate cnot();
  // CNOT * (H on first operand): maps |00> to the Bell state.
  static TwoQubitGate bell();

  const Eigen::Matrix4cd& matrix() const { return matrix_; }

 private:
  Eigen::Matrix4cd matrix_;
};

// Max-abs entry of U U^dagger - I.
double unitarity_error(const Eigen::MatrixXcd& u);

// Applies the gate in place with stride arithmetic; no 2^n x 2^n operator is
// formed.
void apply_two_qubit_gate(Statevector& state, const TwoQubitGate& gate,
                          int first, int second);

}  // namespace sqlab

#endif  // SQLAB_STATEVECTOR_H_
