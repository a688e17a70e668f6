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

#ifndef SQLAB_ENSEMBLE_H_
#define SQLAB_ENSEMBLE_H_

#include <cstdint>
#include <string>
#include <vector>

#include "sqlab/rng.h"
#include "sqlab/statevector.h"

namespace sqlab {

enum class EnsembleKind { kHaarState, kHaarUnitary, kBrickwork, kStabilizerEnum };

// A distribution over n-qubit pure states U|0^n>.
struct EnsembleSpec {
  EnsembleKind kind = EnsembleKind::kHaarState;
  int n = 1;
  int depth = 0;  // brickwork only
  std::uint64_t seed = 0;

  // Throws PreconditionError: brickwork needs even n, stabilizer_enum needs
  // n <= 3, haar_unitary materializes a 2^n x 2^n matrix and is capped at
  // n <= 12.
  void validate() const;
  // Exact ensembles are averaged over their full support instead of sampled.
  bool is_exact() const { return kind == EnsembleKind::kStabilizerEnum; }
  std::string name() const;
};

std::string to_string(EnsembleKind kind);
EnsembleKind ensemble_kind_from_string(const std::string& s);

// One draw using the caller's stream.
Statevector sample_state(const EnsembleSpec& spec, RngStream& rng);

// Support of an exact ensemble (uniform weights).
const std::vector<Statevector>& exact_support(const EnsembleSpec& spec);

}  // namespace sqlab

#endif  // SQLAB_ENSEMBLE_H_
