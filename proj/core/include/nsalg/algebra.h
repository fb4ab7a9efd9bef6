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

// Operator algebras represented by Hilbert-Schmidt orthonormal bases:
// closure from generators, commutant and center.

#ifndef NSALG_ALGEBRA_H_
#define NSALG_ALGEBRA_H_

#include <vector>

#include "nsalg/linalg.h"
#include "nsalg/types.h"

namespace nsalg {

// A subspace of End(C^dim) stored as an orthonormal (HS) basis. The basis is
// kept column-stacked: column k of stacked() is vec(A_k).
//
// Instances produced by generate_algebra, commutant and center are algebras
// (closed under product and dagger). OperatorAlgebra::from_spanning_set
// builds the span of arbitrary operators; closure is then the caller's
// claim and can be checked with closure_error().
class OperatorAlgebra {
 public:
  OperatorAlgebra() = default;
  // `stacked` must have orthonormal columns of length dim*dim.
  OperatorAlgebra(Index dim, Eigen::MatrixXcd stacked, bool unital);

  static OperatorAlgebra from_spanning_set(const std::vector<Operator>& ops,
                                           bool unital,
                                           double tol = kDefaultTol);
  // All of End(C^dim), basis = matrix units in column-major order.
  static OperatorAlgebra full(Index dim);
  // C * identity.
  static OperatorAlgebra scalars(Index dim);

  Index ambient_dim() const { return dim_; }
  Index dimension() const { return stacked_.cols(); }
  bool unital() const { return unital_; }

  Eigen::Map<const Operator> element(Index k) const;
  std::vector<Operator> basis() const;
  const Eigen::MatrixXcd& stacked() const { return stacked_; }

  // Orthogonal projection onto the span and the norm of what is left over.
  Operator project(const Operator& x) const;
  double residual(const Operator& x) const;
  bool contains(const Operator& x, double tol) const;

  // Max |<A_i, A_j> - delta_ij|.
  double orthonormality_error() const;
  // Max residual of A_k^dagger outside the span.
  double dagger_closure_error() const;
  // Max residual of A_i A_j outside the span (quadratic in dimension).
  double product_closure_error() const;
  // Residual of the identity (0 when unital in fact).
  double identity_residual() const;

 private:
  Index dim_ = 0;
  Eigen::MatrixXcd stacked_;
  bool unital_ = false;
};

// Smallest dagger-closed associative algebra containing the generators (and
// the identity when `unital`). Candidate order: identity, then each
// generator followed by its dagger, then products g * A_k for basis index k
// ascending and generator index ascending.
OperatorAlgebra generate_algebra(const std::vector<Operator>& generators,
                                 bool unital = true, double tol = kDefaultTol);

// All X with [g, X] = 0 and [g^dagger, X] = 0 for every generator g.
//
// The nullspace is solved on the block-diagonal subspace selected by a
// generic hermitian element of the generated algebra (fixed internal seed),
// which contains the commutant. Rank decisions use Gram eigenvalues below
// tol * (largest), i.e. singular values below sqrt(tol) * (largest).
OperatorAlgebra commutant(const std::vector<Operator>& generators,
                          double tol = kDefaultTol);
OperatorAlgebra commutant(const OperatorAlgebra& alg, double tol = kDefaultTol);

// A intersected with A'. Spanned by the central projectors of A.
OperatorAlgebra center(const OperatorAlgebra& alg, double tol = kDefaultTol);

// Max residual of a's basis elements outside b.
double containment_residual(const OperatorAlgebra& a, const OperatorAlgebra& b);
// Mutual containment within tol.
bool same_subspace(const OperatorAlgebra& a, const OperatorAlgebra& b,
                   double tol);

}  // namespace nsalg

#endif  // NSALG_ALGEBRA_H_
