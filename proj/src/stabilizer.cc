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

#include "sqlab/stabilizer.h"

#include <cmath>
#include <cstdint>
#include <deque>
#include <set>
#include <string>

#include "sqlab/error.h"

namespace sqlab {
namespace {

constexpr double kGrid = 1e-9;

using StateKey = std::vector<std::int64_t>;

StateKey key_of(const Statevector& s) {
  StateKey key;
  key.reserve(2 * s.dim());
  for (const Complex& a : s.amplitudes()) {
    key.push_back(std::llround(a.real() / kGrid));
    key.push_back(std::llround(a.imag() / kGrid));
  }
  return key;
}

void apply_h(Statevector& s, int q) {
  const double h = 1.0 / std::sqrt(2.0);
  const std::size_t bit = std::size_t{1} << q;
  auto amps = s.mutable_amplitudes();
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if (i & bit) continue;
    const Complex a = amps[i], b = amps[i | bit];
    amps[i] = h * (a + b);
    amps[i | bit] = h * (a - b);
  }
}

void apply_s(Statevector& s, int q) {
  const std::size_t bit = std::size_t{1} << q;
  auto amps = s.mutable_amplitudes();
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if (i & bit) amps[i] *= Complex(0.0, 1.0);
  }
}

void apply_cnot(Statevector& s, int control, int target) {
  const std::size_t cbit = std::size_t{1} << control;
  const std::size_t tbit = std::size_t{1} << target;
  auto amps = s.mutable_amplitudes();
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if ((i & cbit) && !(i & tbit)) std::swap(amps[i], amps[i | tbit]);
  }
}

}  // namespace

void canonicalize_global_phase(Statevector& state) {
  for (const Complex& a : state.amplitudes()) {
    const double mag = std::abs(a);
    if (mag > kGrid) {
      const Complex phase = std::conj(a) / mag;
      for (Complex& b : state.mutable_amplitudes()) b *= phase;
      return;
    }
  }
}

std::vector<Statevector> enumerate_stabilizer_states(int n) {
  if (n < 1 || n > 3) {
    throw PreconditionError("stabilizer enumeration supports n in {1, 2, 3}, got " +
                            std::to_string(n));
  }
  std::vector<Statevector> found;
  std::set<StateKey> seen;
  std::deque<Statevector> frontier;

  Statevector start = Statevector::basis(n, 0);
  seen.insert(key_of(start));
  found.push_back(start);
  frontier.push_back(start);

  auto visit = [&](Statevector next) {
    canonicalize_global_phase(next);
    if (seen.insert(key_of(next)).second) {
      found.push_back(next);
      frontier.push_back(std::move(next));
    }
  };

  while (!frontier.empty()) {
    const Statevector cur = std::move(frontier.front());
    frontier.pop_front();
    for (int q = 0; q < n; ++q) {
      Statevector h = cur;
      apply_h(h, q);
      visit(std::move(h));
      Statevector s = cur;
      apply_s(s, q);
      visit(std::move(s));
    }
    for (int c = 0; c < n; ++c) {
      for (int t = 0; t < n; ++t) {
        if (c == t) continue;
        Statevector x = cur;
        apply_cnot(x, c, t);
        visit(std::move(x));
      }
    }
  }
  return found;
}

StabilizerCensus census_by_enumeration(int n) {
  const std::vector<Statevector> states = enumerate_stabilizer_states(n);
  StabilizerCensus c;
  c.n = n;
  c.total = states.size();
  std::size_t uniform = 0;
  for (const Statevector& s : states) {
    const double target = std::ldexp(1.0, -n);
    bool flat = true;
    for (const Complex& a : s.amplitudes()) {
      if (std::abs(std::norm(a) - target) > 1e-9) {
        flat = false;
        break;
      }
    }
    if (flat) ++uniform;
  }
  c.uniform_output = uniform;
  c.ratio = Rational(c.uniform_output, c.total);
  return c;
}

}  // namespace sqlab
