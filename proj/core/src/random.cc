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

#include "nsalg/random.h"

#include <cmath>

#include "nsalg/linalg.h"

namespace nsalg {

Operator random_ginibre(Index rows, Index cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  Operator m(rows, cols);
  for (Index j = 0; j < cols; ++j) {
    for (Index i = 0; i < rows; ++i) m(i, j) = Complex(normal(rng), normal(rng));
  }
  return m;
}

Operator random_hermitian(Index dim, Rng& rng) {
  const Operator g = random_ginibre(dim, dim, rng);
  return 0.5 * (g + g.adjoint());
}

Operator random_unitary(Index dim, Rng& rng) {
  const Operator g = random_ginibre(dim, dim, rng);
  Eigen::HouseholderQR<Operator> qr(g);
  Operator q = qr.householderQ();
  const Operator r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Index j = 0; j < dim; ++j) {
    const double a = std::abs(r(j, j));
    if (a > 0) q.col(j) *= r(j, j) / a;
  }
  return q;
}

StateVector random_state(Index dim, Rng& rng) {
  StateVector v = random_ginibre(dim, 1, rng).col(0);
  return v / v.norm();
}

Operator random_element(const OperatorAlgebra& alg, Rng& rng) {
  const Eigen::VectorXcd c = random_ginibre(alg.dimension(), 1, rng).col(0);
  return unvec(alg.stacked() * c, alg.ambient_dim());
}

}  // namespace nsalg
