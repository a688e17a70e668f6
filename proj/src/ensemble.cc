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

#include "sqlab/ensemble.h"

#include <array>
#include <mutex>

#include "sqlab/circuit.h"
#include "sqlab/error.h"
#include "sqlab/haar.h"
#include "sqlab/stabilizer.h"

namespace sqlab {

void EnsembleSpec::validate() const {
  if (n < 1 || n > 24) {
    throw PreconditionError("ensemble: n must be in [1, 24], got " +
                            std::to_string(n));
  }
  switch (kind) {
    case EnsembleKind::kHaarState:
      break;
    case EnsembleKind::kHaarUnitary:
      if (n > 12) throw PreconditionError("haar_unitary ensemble: n must be <= 12");
      break;
    case EnsembleKind::kBrickwork:
      if (n < 2 || n % 2 != 0) {
        throw PreconditionError("brickwork ensemble: n must be even, got " +
                                std::to_string(n));
      }
      if (depth < 0) throw PreconditionError("brickwork ensemble: d must be >= 0");
      break;
    case EnsembleKind::kStabilizerEnum:
      if (n > 3) {
        throw PreconditionError("stabilizer_enum ensemble: n must be <= 3, got " +
                                std::to_string(n));
      }
      break;
  }
}

std::string to_string(EnsembleKind kind) {
  switch (kind) {
    case EnsembleKind::kHaarState: return "haar_state";
    case EnsembleKind::kHaarUnitary: return "haar_unitary";
    case EnsembleKind::kBrickwork: return "brickwork";
    case EnsembleKind::kStabilizerEnum: return "stabilizer_enum";
  }
  return "unknown";
}

EnsembleKind ensemble_kind_from_string(const std::string& s) {
  if (s == "haar_state") return EnsembleKind::kHaarState;
  if (s == "haar_unitary") return EnsembleKind::kHaarUnitary;
  if (s == "brickwork") return EnsembleKind::kBrickwork;
  if (s == "stabilizer_enum") return EnsembleKind::kStabilizerEnum;
  throw PreconditionError("unknown ensemble '" + s +
                          "' (haar_state|haar_unitary|brickwork|stabilizer_enum)");
}

std::string EnsembleSpec::name() const {
  std::string out = to_string(kind) + "(n=" + std::to_string(n);
  if (kind == EnsembleKind::kBrickwork) out += ",d=" + std::to_string(depth);
  return out + ")";
}

Statevector sample_state(const EnsembleSpec& spec, RngStream& rng) {
  switch (spec.kind) {
    case EnsembleKind::kHaarState:
      return haar_state(spec.n, rng);
    case EnsembleKind::kHaarUnitary: {
      const UnitaryMatrix u = haar_unitary(1 << spec.n, rng);
      std::vector<Complex> col(u.rows());
      for (Eigen::Index i = 0; i < u.rows(); ++i) col[i] = u(i, 0);
      return Statevector::from_amplitudes(spec.n, std::move(col));
    }
    case EnsembleKind::kBrickwork:
      return run_circuit(BrickworkCircuit::random(spec.n, spec.depth, rng));
    case EnsembleKind::kStabilizerEnum: {
      const auto& support = exact_support(spec);
      return support[static_cast<std::size_t>(rng() % support.size())];
    }
  }
  throw PreconditionError("unknown ensemble kind");
}

const std::vector<Statevector>& exact_support(const EnsembleSpec& spec) {
  if (spec.kind != EnsembleKind::kStabilizerEnum) {
    throw PreconditionError("ensemble " + to_string(spec.kind) +
                            " has no finite support");
  }
  spec.validate();
  static std::array<std::vector<Statevector>, 4> cache;
  static std::array<std::once_flag, 4> once;
  std::call_once(once[spec.n],
                 [&] { cache[spec.n] = enumerate_stabilizer_states(spec.n); });
  return cache[spec.n];
}

}  // namespace sqlab
