// Copyright 2026 The nsalg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Seeded random draws used by the pipelines and their tests.

#ifndef NSALG_RANDOM_H_
#define NSALG_RANDOM_H_

#include <random>

#include "nsalg/algebra.h"
#include "nsalg/types.h"

namespace nsalg {

using Rng = std::mt19937_64;

// Complex Gaussian matrix, entries with unit variance.
Operator random_ginibre(Index rows, Index cols, Rng& rng);
Operator random_hermitian(Index dim, Rng& rng);
// Haar-distributed (QR of a Ginibre matrix with the phase fix).
Operator random_unitary(Index dim, Rng& rng);
// Unit vector, uniformly distributed on the sphere.
StateVector random_state(Index dim, Rng& rng);
// Gaussian combination of the algebra's orthonormal basis.
Operator random_element(const OperatorAlgebra& alg, Rng& rng);

}  // namespace nsalg

#endif  // NSALG_RANDOM_H_
