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

#include "sqlab/haar.h"

#include <cmath>

#include <Eigen/QR>

#include "sqlab/error.h"

namespace sqlab {
namespace {

template <typename Matrix>
Matrix phase_corrected_q(const Matrix& ginibre) {
  Eigen::HouseholderQR<Matrix> qr(ginibre);
  Matrix q = qr.householderQ();
  const Matrix& r = qr.matrixQR();
  for (Eigen::Index j = 0; j < q.cols(); ++j) {
    const Complex diag = r(j, j);
    const double mag = std::abs(diag);
    // A zero diagonal has probability zero under the Ginibre ensemble.
    if (mag > 0.0) q.col(j) *= diag / mag;
  }
  return q;
}

}  // namespace

std::vector<Complex> complex_gaussian_vector(std::size_t dim, RngStream& rng) {
  std::vector<Complex> out(dim);
  for (Complex& z : out) {
    const double re = rng.normal();
    const double im = rng.normal();
    z = Complex(re, im);
  }
  return out;
}

UnitaryMatrix haar_unitary(int dim, RngStream& rng) {
  if (dim < 1) throw PreconditionError("haar_unitary: dim must be >= 1");
  UnitaryMatrix g(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j) {
    for (Eigen::Index i = 0; i < dim; ++i) {
      const double re = rng.normal();
      const double im = rng.normal();
      g(i, j) = Complex(re, im);
    }
  }
  return phase_corrected_q(g);
}

Eigen::Matrix4cd haar_unitary4(RngStream& rng) {
  Eigen::Matrix4cd g;
  for (int j = 0; j < 4; ++j) {
    for (int i = 0; i < 4; ++i) {
      const double re = rng.normal();
      const double im = rng.normal();
      g(i, j) = Complex(re, im);
    }
  }
  return phase_corrected_q(g);
}

std::vector<Complex> haar_vector(std::size_t dim, RngStream& rng) {
  if (dim == 0) throw PreconditionError("haar_state: dim must be >= 1");
  std::vector<Complex> v = complex_gaussian_vector(dim, rng);
  double s = 0.0;
  for (const Complex& z : v) s += std::norm(z);
  const double inv = 1.0 / std::sqrt(s);
  for (Complex& z : v) z *= inv;
  return v;
}

Statevector haar_state(int n, RngStream& rng) {
  if (n < 1) throw PreconditionError("haar_state: n must be >= 1");
  return Statevector::from_amplitudes(n, haar_vector(std::size_t{1} << n, rng));
}

}  // namespace sqlab
