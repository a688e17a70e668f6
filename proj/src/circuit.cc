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

#include "sqlab/circuit.h"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <string>

#include "sqlab/error.h"
#include "sqlab/haar.h"

namespace sqlab {

std::vector<std::pair<int, int>> BrickworkCircuit::layer_pairs(int n,
                                                               int layer_index) {
  std::vector<std::pair<int, int>> pairs;
  const int offset = layer_index % 2;
  for (int q = offset; q < n + offset; q += 2) {
    pairs.emplace_back(q % n, (q + 1) % n);
  }
  return pairs;
}

BrickworkCircuit::BrickworkCircuit(int n, std::vector<Layer> layers)
    : n_(n), layers_(std::move(layers)) {
  if (n < 2 || n % 2 != 0) {
    throw PreconditionError("brickwork circuits need even n >= 2, got n=" +
                            std::to_string(n));
  }
  for (std::size_t k = 0; k < layers_.size(); ++k) {
    auto expected = layer_pairs(n, static_cast<int>(k));
    std::vector<std::pair<int, int>> got;
    std::vector<int> seen(n, 0);
    for (const GatePlacement& g : layers_[k]) {
      if (g.first < 0 || g.first >= n || g.second < 0 || g.second >= n ||
          g.first == g.second) {
        throw PreconditionError("layer " + std::to_string(k) +
                                ": invalid qubit pair");
      }
      ++seen[g.first];
      ++seen[g.second];
      got.emplace_back(std::min(g.first, g.second),
                       std::max(g.first, g.second));
    }
    if (std::any_of(seen.begin(), seen.end(), [](int c) { return c != 1; })) {
      throw PreconditionError("layer " + std::to_string(k) +
                              ": each qubit must appear in exactly one gate");
    }
    for (auto& p : expected) p = {std::min(p.first, p.second),
                                  std::max(p.first, p.second)};
    std::sort(expected.begin(), expected.end());
    std::sort(got.begin(), got.end());
    if (got != expected) {
      throw PreconditionError("layer " + std::to_string(k) +
                              ": pairing does not match brickwork parity");
    }
  }
}

BrickworkCircuit BrickworkCircuit::random(int n, int depth, RngStream& rng) {
  if (depth < 0) throw PreconditionError("depth must be >= 0");
  if (n < 2 || n % 2 != 0) {
    throw PreconditionError("brickwork circuits need even n >= 2, got n=" +
                            std::to_string(n));
  }
  std::vector<Layer> layers(depth);
  for (int k = 0; k < depth; ++k) {
    for (const auto& [a, b] : layer_pairs(n, k)) {
      layers[k].push_back({TwoQubitGate(haar_unitary4(rng)), a, b});
    }
  }
  return BrickworkCircuit(n, std::move(layers));
}

BrickworkCircuit BrickworkCircuit::uniform_gate(int n, int depth,
                                                const TwoQubitGate& gate) {
  if (depth < 0) throw PreconditionError("depth must be >= 0");
  if (n < 2 || n % 2 != 0) {
    throw PreconditionError("brickwork circuits need even n >= 2, got n=" +
                            std::to_string(n));
  }
  std::vector<Layer> layers(depth);
  for (int k = 0; k < depth; ++k) {
    for (const auto& [a, b] : layer_pairs(n, k)) {
      layers[k].push_back({gate, a, b});
    }
  }
  return BrickworkCircuit(n, std::move(layers));
}

Statevector run_circuit(const BrickworkCircuit& circuit, std::uint64_t initial) {
  Statevector state = Statevector::basis(circuit.num_qubits(), initial);
  for (const Layer& layer : circuit.layers()) {
    for (const GatePlacement& g : layer) {
      apply_two_qubit_gate(state, g.gate, g.first, g.second);
    }
  }
  const double drift = std::abs(state.norm() - 1.0);
  if (drift > 1e-10) {
    std::clog << "sqlab: renormalizing statevector after norm drift " << drift
              << "\n";
    state.renormalize();
  }
  return state;
}

}  // namespace sqlab
