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

#ifndef SQLAB_HAAR_H_
#define SQLAB_HAAR_H_

#include <vector>

#include <Eigen/Core>

#include "sqlab/rng.h"
#include "sqlab/statevector.h"

namespace sqlab {

using UnitaryMatrix = Eigen::MatrixXcd;

// Entries g + i h with g, h independent standard normals (so E|z|^2 = 2).
std::vector<Complex> complex_gaussian_vector(std::size_t dim, RngStream& rng);

// Haar-distributed element of U(dim): QR of a complex Ginibre matrix with each
// column of Q rescaled by the phase of the matching diagonal entry of R.
UnitaryMatrix haar_unitary(int dim, RngStream& rng);

// Fixed-size variant used for brickwork gates.
Eigen::Matrix4cd haar_unitary4(RngStream& rng);

// Uniform point on the complex unit sphere of C^dim (normalized Gaussian).
std::vector<Complex> haar_vector(std::size_t dim, RngStream& rng);

// Haar-random n-qubit pure state, i.e. U|0^n> for Haar U without forming U.
Statevector haar_state(int n, RngStream& rng);

}  // namespace sqlab

#endif  // SQLAB_HAAR_H_
