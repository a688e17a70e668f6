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

#ifndef SQLAB_STABILIZER_H_
#define SQLAB_STABILIZER_H_

#include <vector>

#include "sqlab/analytic.h"
#include "sqlab/statevector.h"

namespace sqlab {

// All n-qubit stabilizer states (n <= 3), found by breadth-first closure of
// |0^n> under H and S on every qubit and CNOT on every ordered pair. States
// are returned in discovery order with the global phase fixed so that the
// first nonzero amplitude is real and positive.
std::vector<Statevector> enumerate_stabilizer_states(int n);

// Counts from the enumeration: total states and those with a uniform Born
// distribution (every |amp|^2 = 2^{-n} within 1e-9).
StabilizerCensus census_by_enumeration(int n);

// Divides by the phase of the first amplitude with modulus above 1e-9.
void canonicalize_global_phase(Statevector& state);

}  // namespace sqlab

#endif  // SQLAB_STABILIZER_H_
