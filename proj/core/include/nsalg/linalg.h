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

// Small matrix helpers shared across modules.

#ifndef NSALG_LINALG_H_
#define NSALG_LINALG_H_

#include <string_view>
#include <vector>

#include "nsalg/types.h"

namespace nsalg {

// Hilbert-Schmidt inner product tr(A^dagger B). Conjugate-linear in A.
Complex hs_inner(const Operator& a, const Operator& b);

// Frobenius (Hilbert-Schmidt) norm.
double hs_norm(const Operator& a);

Operator identity(Index dim);
Operator dagger(const Operator& a);
Operator commutator(const Operator& a, const Operator& b);
Operator kron(const Operator& a, const Operator& b);

// Single-qubit Pauli matrices.
Operator pauli_x();
Operator pauli_y();
Operator pauli_z();

// Embeds a single-qubit operator at `qubit` (0 = leftmost tensor factor).
Operator embed_single(const Operator& op, int qubit, int num_qubits);

bool all_finite(const Operator& a);
bool is_hermitian(const Operator& a, double tol);
bool is_unitary(const Operator& a, double tol);

// Throws DimensionError unless `a` is square with side `dim`.
void require_dim(const Operator& a, Index dim, std::string_view what);
// Throws DimensionError unless all operators are square and share one size.
// Returns that size (0 for an empty list).
Index common_dim(const std::vector<Operator>& ops, std::string_view what);

// Column-major vectorization; vec(A)(i + j*d) = A(i, j).
Eigen::VectorXcd vec(const Operator& a);
Operator unvec(const Eigen::Ref<const Eigen::VectorXcd>& v, Index dim);

// Number of singular values above rel_tol * (largest singular value).
Index numerical_rank(const Eigen::MatrixXcd& m, double rel_tol);

// Partial trace over the second factor of C^n (x) C^d.
Operator partial_trace_second(const Operator& a, Index n, Index d);

}  // namespace nsalg

#endif  // NSALG_LINALG_H_
