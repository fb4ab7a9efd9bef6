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

#include "nsalg/linalg.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "internal.h"

namespace nsalg {

Complex hs_inner(const Operator& a, const Operator& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("hs_inner: operand shapes differ");
  }
  return a.conjugate().cwiseProduct(b).sum();
}

double hs_norm(const Operator& a) { return a.norm(); }

Operator identity(Index dim) { return Operator::Identity(dim, dim); }

Operator dagger(const Operator& a) { return a.adjoint(); }

Operator commutator(const Operator& a, const Operator& b) {
  return a * b - b * a;
}

Operator kron(const Operator& a, const Operator& b) {
  Operator out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Operator pauli_x() {
  Operator m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

Operator pauli_y() {
  Operator m(2, 2);
  m << 0, Complex(0, -1), Complex(0, 1), 0;
  return m;
}

Operator pauli_z() {
  Operator m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

Operator embed_single(const Operator& op, int qubit, int num_qubits) {
  if (qubit < 0 || qubit >= num_qubits) {
    throw InvalidInput("embed_single: qubit index out of range");
  }
  const Index left = Index{1} << qubit;
  const Index right = Index{1} << (num_qubits - qubit - 1);
  return kron(kron(identity(left), op), identity(right));
}

bool all_finite(const Operator& a) { return a.allFinite(); }

bool is_hermitian(const Operator& a, double tol) {
  return a.rows() == a.cols() && (a - a.adjoint()).norm() <= tol;
}

bool is_unitary(const Operator& a, double tol) {
  return a.rows() == a.cols() &&
         (a.adjoint() * a - identity(a.rows())).norm() <= tol;
}

void require_dim(const Operator& a, Index dim, std::string_view what) {
  if (a.rows() != dim || a.cols() != dim) {
    throw DimensionError(std::string(what) + ": expected " +
                         std::to_string(dim) + "x" + std::to_string(dim) +
                         " operator, got " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()));
  }
}

Index common_dim(const std::vector<Operator>& ops, std::string_view what) {
  if (ops.empty()) return 0;
  const Index dim = ops.front().rows();
  for (const auto& op : ops) require_dim(op, dim, what);
  return dim;
}

Eigen::VectorXcd vec(const Operator& a) {
  return Eigen::Map<const Eigen::VectorXcd>(a.data(), a.size());
}

Operator unvec(const Eigen::Ref<const Eigen::VectorXcd>& v, Index dim) {
  return Eigen::Map<const Operator>(v.data(), dim, dim);
}

Index numerical_rank(const Eigen::MatrixXcd& m, double rel_tol) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return 0;
  Index rank = 0;
  for (Index i = 0; i < s.size(); ++i) {
    if (s(i) > rel_tol * s(0)) ++rank;
  }
  return rank;
}

Operator partial_trace_second(const Operator& a, Index n, Index d) {
  require_dim(a, n * d, "partial_trace_second");
  Operator out = Operator::Zero(n, n);
  for (Index l = 0; l < n; ++l) {
    for (Index k = 0; k < n; ++k) {
      Complex acc = 0.0;
      for (Index m = 0; m < d; ++m) acc += a(l * d + m, k * d + m);
      out(l, k) = acc;
    }
  }
  return out;
}

namespace internal {

std::vector<std::pair<Index, Index>> cluster_spectrum(
    const Eigen::VectorXd& evals, double rel_gap) {
  std::vector<std::pair<Index, Index>> clusters;
  const Index n = evals.size();
  if (n == 0) return clusters;
  const double range = evals(n - 1) - evals(0);
  const double scale = std::max(std::abs(evals(0)), std::abs(evals(n - 1)));
  const double threshold = std::max(rel_gap * range, 1e-12 * scale);
  Index start = 0;
  for (Index i = 1; i < n; ++i) {
    if (evals(i) - evals(i - 1) > threshold) {
      clusters.emplace_back(start, i - start);
      start = i;
    }
  }
  clusters.emplace_back(start, n - start);
  return clusters;
}

}  // namespace internal
}  // namespace nsalg
