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

#ifndef SQLAB_CIRCUIT_H_
#define SQLAB_CIRCUIT_H_

#include <cstdint>
#include <vector>

#include "sqlab/rng.h"
#include "sqlab/statevector.h"

namespace sqlab {

struct GatePlacement {
  TwoQubitGate gate;
  int first;
  int second;
};

using Layer = std::vector<GatePlacement>;

// 1D brickwork with periodic boundary on an even number of qubits. Layer 0
// (and every even-indexed layer) pairs (0,1),(2,3),...; odd-indexed layers
// pair (1,2),(3,4),...,(n-1,0).
class BrickworkCircuit {
 public:
  // Validates the layer structure; throws PreconditionError on odd n, a
  // missing/duplicated qubit, or a pair that does not match the layer parity.
  BrickworkCircuit(int n, std::vector<Layer> layers);

  // Every gate drawn independently from the Haar measure on U(4).
  static BrickworkCircuit random(int n, int depth, RngStream& rng);
  // Uses the same gate everywhere (identity, Bell, ...).
  static BrickworkCircuit uniform_gate(int n, int depth,
                                       const TwoQubitGate& gate);

  int num_qubits() const { return n_; }
  int depth() const { return static_cast<int>(layers_.size()); }
  const std::vector<Layer>& layers() const { return layers_; }

  // The (first, second) pairs a layer at the given index must contain.
  static std::vector<std::pair<int, int>> layer_pairs(int n, int layer_index);

 private:
  int n_;
  std::vector<Layer> layers_;
};

// Applies layers in order to |initial>. If the final norm drifts from 1 by more
// than 1e-10 the state is renormalized and the event is logged to stderr.
Statevector run_circuit(const BrickworkCircuit& circuit,
                        std::uint64_t initial = 0);

}  // namespace sqlab

#endif  // SQLAB_CIRCUIT_H_
